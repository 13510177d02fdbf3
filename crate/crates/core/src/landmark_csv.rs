//! Landmark CSV files.
//!
//! UTF-8, header `image_id,landmark_index,x,y,confidence`, one row per
//! visible landmark. `landmark_index` is 0-based; the confidence column
//! may be empty. Landmarks with no row are invisible. Coordinates are
//! written with 6 decimal places and rows sorted by
//! `(image_id, landmark_index)`, so write→read round-trips are value-exact
//! for coordinates representable at that precision.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{LandmarkSet, Point2};

pub const HEADER: &str = "image_id,landmark_index,x,y,confidence";

/// Parse a landmark CSV into per-image sets of `k` landmarks.
///
/// Duplicate `(image_id, landmark_index)` pairs, indices outside `[0, k)`,
/// and non-numeric fields are reported with their line number. An empty
/// confidence cell is read as "no confidence"; if any row of a set carries
/// a confidence the set gets a confidence array with 0.0 placeholders for
/// the rows that do not.
pub fn read_landmark_csv(path: &Path, k: usize) -> Result<BTreeMap<String, LandmarkSet>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_landmark_csv(&text, k, path)
}

fn parse_landmark_csv(
    text: &str,
    k: usize,
    path: &Path,
) -> Result<BTreeMap<String, LandmarkSet>> {
    let mut out: BTreeMap<String, LandmarkSet> = BTreeMap::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        if idx == 0 {
            if line != HEADER {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("expected header `{HEADER}`, got `{line}`"),
                ));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected 5 fields, got {}", fields.len()),
            ));
        }
        let image_id = fields[0].to_string();
        if image_id.is_empty() {
            return Err(Error::parse(path, line_no, "empty image_id"));
        }
        let index: usize = fields[1]
            .parse()
            .map_err(|_| Error::parse(path, line_no, format!("bad landmark_index `{}`", fields[1])))?;
        if index >= k {
            return Err(Error::parse(
                path,
                line_no,
                format!("landmark_index {index} outside [0, {k})"),
            ));
        }
        let x: f64 = fields[2]
            .parse()
            .map_err(|_| Error::parse(path, line_no, format!("bad x `{}`", fields[2])))?;
        let y: f64 = fields[3]
            .parse()
            .map_err(|_| Error::parse(path, line_no, format!("bad y `{}`", fields[3])))?;
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::parse(path, line_no, "non-finite coordinate"));
        }
        let conf: Option<f64> = if fields[4].is_empty() {
            None
        } else {
            let c: f64 = fields[4]
                .parse()
                .map_err(|_| Error::parse(path, line_no, format!("bad confidence `{}`", fields[4])))?;
            if !c.is_finite() || c < 0.0 {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("confidence must be finite and >= 0, got {c}"),
                ));
            }
            Some(c)
        };

        let set = out
            .entry(image_id.clone())
            .or_insert_with(|| LandmarkSet::invisible(k));
        if set.visible[index] {
            return Err(Error::parse(
                path,
                line_no,
                format!("duplicate landmark {index} for image `{image_id}`"),
            ));
        }
        set.points[index] = Point2::new(x, y);
        set.visible[index] = true;
        if let Some(c) = conf {
            set.confidence.get_or_insert_with(|| vec![0.0; k])[index] = c;
        }
    }
    Ok(out)
}

/// Write per-image landmark sets as CSV. Invisible landmarks get no row.
pub fn write_landmark_csv(map: &BTreeMap<String, LandmarkSet>, path: &Path) -> Result<()> {
    let mut buf = String::new();
    buf.push_str(HEADER);
    buf.push('\n');
    for (image_id, set) in map {
        for i in 0..set.len() {
            if !set.visible[i] {
                continue;
            }
            let conf = match &set.confidence {
                Some(c) => format!("{:.6}", c[i]),
                None => String::new(),
            };
            buf.push_str(&format!(
                "{image_id},{i},{:.6},{:.6},{conf}\n",
                set.points[i].x, set.points[i].y
            ));
        }
    }
    write_atomic(path, buf.as_bytes())
}

/// Write to a sibling temp file, then rename into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!(
        "{}.tmp",
        path.extension().and_then(|e| e.to_str()).unwrap_or("")
    ));
    {
        let mut f = std::fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
        f.write_all(bytes).map_err(|e| Error::io(&tmp, e))?;
    }
    std::fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LandmarkSet;

    fn parse(text: &str, k: usize) -> Result<BTreeMap<String, LandmarkSet>> {
        parse_landmark_csv(text, k, Path::new("<test>"))
    }

    #[test]
    fn parses_rows_with_confidence() {
        let m = parse(
            "image_id,landmark_index,x,y,confidence\nimg1,0,12.5,30.0,0.9\n",
            2,
        )
        .unwrap();
        let set = &m["img1"];
        assert_eq!(set.points[0], Point2::new(12.5, 30.0));
        assert!(set.visible[0]);
        assert!(!set.visible[1]);
        assert_eq!(set.confidence.as_ref().unwrap()[0], 0.9);
    }

    #[test]
    fn header_only_is_empty_map() {
        assert!(parse("image_id,landmark_index,x,y,confidence\n", 3)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn duplicate_row_is_an_error() {
        let err = parse(
            "image_id,landmark_index,x,y,confidence\na,0,1,2,\na,0,3,4,\n",
            2,
        )
        .unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn out_of_range_index_is_an_error() {
        let err = parse("image_id,landmark_index,x,y,confidence\na,5,1,2,\n", 2).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn non_numeric_coordinate_is_an_error() {
        let err = parse("image_id,landmark_index,x,y,confidence\na,0,oops,2,\n", 2).unwrap_err();
        assert!(err.to_string().contains("bad x"), "{err}");
    }

    #[test]
    fn round_trip_preserves_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("lm.csv");
        let mut map = BTreeMap::new();
        let mut set = LandmarkSet::from_points(vec![
            Point2::new(1.5, 2.25),
            Point2::new(-3.125, 40.0),
        ]);
        set.confidence = Some(vec![0.5, 0.875]);
        map.insert("imgA".to_string(), set);
        let mut no_conf = LandmarkSet::from_points(vec![
            Point2::new(0.0, 0.0),
            Point2::new(9.0, 8.0),
        ]);
        no_conf.visible[0] = false;
        no_conf.points[0] = Point2::new(0.0, 0.0);
        map.insert("imgB".to_string(), no_conf);

        write_landmark_csv(&map, &path).unwrap();
        let back = read_landmark_csv(&path, 2).unwrap();
        assert_eq!(back, map);
    }

    #[test]
    fn empty_map_writes_header_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.csv");
        write_landmark_csv(&BTreeMap::new(), &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, format!("{HEADER}\n"));
    }
}
