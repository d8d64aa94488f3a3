//! CSV serialization for recordings, annotations, and dataset directories.
//!
//! Recording CSV: line 1 is `#subject=<id>,fs=<hz>,channels=<n1|n2|...>`,
//! then one sample instant per row with comma-separated channel values.
//! Annotation CSV: header `onset_s,offset_s`, one interval per row.
//! Dataset layout: `<root>/<subject_id>/recording.csv` and
//! `<root>/<subject_id>/seizures.csv`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{AnnotationSet, Recording};
use crate::{Error, Result};

pub fn save_recording(rec: &Recording, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    writeln!(
        out,
        "#subject={},fs={},channels={}",
        rec.subject_id,
        rec.fs_hz,
        rec.channel_names.join("|")
    )
    .expect("string write");
    let n = rec.n_samples();
    let chans = rec.samples();
    let mut row = String::new();
    for t in 0..n {
        row.clear();
        for (c, ch) in chans.iter().enumerate() {
            if c > 0 {
                row.push(',');
            }
            // Shortest round-trip decimal form: load() restores bits exactly.
            write!(row, "{}", ch[t]).expect("string write");
        }
        out.push_str(&row);
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

pub fn load_recording(path: impl AsRef<Path>) -> Result<Recording> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(path, 1, "empty file"))?;
    let header = header
        .strip_prefix('#')
        .ok_or_else(|| Error::parse(path, 1, "header must start with '#'"))?;

    let mut subject = None;
    let mut fs_hz = None;
    let mut channels: Option<Vec<String>> = None;
    for field in header.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::parse(path, 1, format!("malformed header field '{field}'")))?;
        match key {
            "subject" => subject = Some(value.to_string()),
            "fs" => {
                fs_hz = Some(value.parse::<f64>().map_err(|_| {
                    Error::parse(path, 1, format!("non-numeric fs '{value}'"))
                })?)
            }
            "channels" => {
                channels = Some(value.split('|').map(str::to_string).collect());
            }
            other => {
                return Err(Error::parse(path, 1, format!("unknown header key '{other}'")));
            }
        }
    }
    let subject = subject.ok_or_else(|| Error::parse(path, 1, "header missing subject"))?;
    let fs_hz = fs_hz.ok_or_else(|| Error::parse(path, 1, "header missing fs"))?;
    let channels = channels.ok_or_else(|| Error::parse(path, 1, "header missing channels"))?;
    if fs_hz != 200.0 && fs_hz != 500.0 {
        return Err(Error::parse(
            path,
            1,
            format!("fs {fs_hz} not in {{200, 500}}"),
        ));
    }

    let n_ch = channels.len();
    let mut samples: Vec<Vec<f64>> = vec![Vec::new(); n_ch];
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let mut count = 0;
        for (c, cell) in line.split(',').enumerate() {
            if c >= n_ch {
                return Err(Error::parse(
                    path,
                    lineno,
                    format!("row has more than {n_ch} values"),
                ));
            }
            let v: f64 = cell.trim().parse().map_err(|_| {
                Error::parse(path, lineno, format!("non-numeric cell '{cell}'"))
            })?;
            samples[c].push(v);
            count += 1;
        }
        if count != n_ch {
            return Err(Error::parse(
                path,
                lineno,
                format!("row has {count} values, expected {n_ch}"),
            ));
        }
    }
    Recording::new(subject, fs_hz, channels, samples)
}

pub fn save_annotations(ann: &AnnotationSet, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::from("onset_s,offset_s\n");
    for &(on, off) in ann.intervals() {
        writeln!(out, "{on},{off}").expect("string write");
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

pub fn load_annotations(path: impl AsRef<Path>) -> Result<AnnotationSet> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut intervals = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || (lineno == 1 && line == "onset_s,offset_s") {
            continue;
        }
        let (on, off) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(path, lineno, "expected 'onset_s,offset_s'"))?;
        let on: f64 = on.trim().parse().map_err(|_| {
            Error::parse(path, lineno, format!("non-numeric onset '{on}'"))
        })?;
        let off: f64 = off.trim().parse().map_err(|_| {
            Error::parse(path, lineno, format!("non-numeric offset '{off}'"))
        })?;
        intervals.push((on, off));
    }
    AnnotationSet::new(intervals)
}

/// Writes `<root>/<subject>/recording.csv` and `seizures.csv` per subject.
pub fn save_dataset(root: impl AsRef<Path>, dataset: &[(Recording, AnnotationSet)]) -> Result<()> {
    let root = root.as_ref();
    for (rec, ann) in dataset {
        let dir = root.join(&rec.subject_id);
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        save_recording(rec, dir.join("recording.csv"))?;
        save_annotations(ann, dir.join("seizures.csv"))?;
    }
    Ok(())
}

/// Loads every subject directory under `root`, sorted by subject id. A
/// missing `seizures.csv` means a seizure-free recording.
pub fn load_dataset(root: impl AsRef<Path>) -> Result<Vec<(Recording, AnnotationSet)>> {
    let root = root.as_ref();
    let mut dirs: Vec<_> = fs::read_dir(root)
        .map_err(|e| Error::io(root, e))?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().is_dir())
        .map(|e| e.path())
        .collect();
    dirs.sort();
    if dirs.is_empty() {
        return Err(Error::invalid(format!(
            "no subject directories under {}",
            root.display()
        )));
    }
    let mut out = Vec::with_capacity(dirs.len());
    for dir in dirs {
        let rec = load_recording(dir.join("recording.csv"))?;
        let ann_path = dir.join("seizures.csv");
        let ann = if ann_path.exists() {
            load_annotations(&ann_path)?
        } else {
            AnnotationSet::empty()
        };
        ann.check_within(rec.duration_s())?;
        out.push((rec, ann));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_channel_rec() -> Recording {
        let c0: Vec<f64> = (0..1000).map(|t| (t as f64 * 0.01).sin()).collect();
        let c1: Vec<f64> = (0..1000).map(|t| (t as f64 * 0.02).cos() * 3.5).collect();
        Recording::new("s01", 200.0, vec!["C3".into(), "C4".into()], vec![c0, c1]).unwrap()
    }

    #[test]
    fn recording_round_trip_is_identity() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rec.csv");
        let rec = two_channel_rec();
        save_recording(&rec, &path).unwrap();
        let back = load_recording(&path).unwrap();
        assert_eq!(rec, back);
        assert_eq!(back.n_samples(), 1000);
    }

    #[test]
    fn header_lists_fs_and_channels_verbatim() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rec.csv");
        save_recording(&two_channel_rec(), &path).unwrap();
        let first = std::fs::read_to_string(&path)
            .unwrap()
            .lines()
            .next()
            .unwrap()
            .to_string();
        assert_eq!(first, "#subject=s01,fs=200,channels=C3|C4");
    }

    #[test]
    fn wide_row_errors_at_that_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(
            &path,
            "#subject=x,fs=200,channels=a|b\n1.0,2.0\n1.0,2.0,3.0\n",
        )
        .unwrap();
        let err = load_recording(&path).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(":3:"), "error should name line 3, got: {msg}");
    }

    #[test]
    fn narrow_row_and_bad_cell_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(&path, "#subject=x,fs=200,channels=a|b\n1.0\n").unwrap();
        assert!(load_recording(&path).is_err());
        std::fs::write(&path, "#subject=x,fs=200,channels=a|b\n1.0,zz\n").unwrap();
        let err = load_recording(&path).unwrap_err();
        assert!(err.to_string().contains("zz"));
    }

    #[test]
    fn unsupported_rate_rejected_by_name() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(&path, "#subject=x,fs=256,channels=a\n1.0\n").unwrap();
        let err = load_recording(&path).unwrap_err();
        assert!(err.to_string().contains("256"));
    }

    #[test]
    fn annotations_round_trip_and_validate() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ann.csv");
        std::fs::write(&path, "onset_s,offset_s\n10,20\n40,45\n").unwrap();
        let ann = load_annotations(&path).unwrap();
        assert_eq!(ann.intervals(), &[(10.0, 20.0), (40.0, 45.0)]);

        std::fs::write(&path, "onset_s,offset_s\n10,20\n15,25\n").unwrap();
        assert!(load_annotations(&path).is_err());

        std::fs::write(&path, "").unwrap();
        assert!(load_annotations(&path).unwrap().is_empty());
    }

    #[test]
    fn dataset_layout_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let rec = two_channel_rec();
        let ann = AnnotationSet::new(vec![(1.0, 2.0)]).unwrap();
        save_dataset(dir.path(), &[(rec.clone(), ann.clone())]).unwrap();
        assert!(dir.path().join("s01/recording.csv").exists());
        assert!(dir.path().join("s01/seizures.csv").exists());
        let back = load_dataset(dir.path()).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].0, rec);
        assert_eq!(back[0].1, ann);
    }
}
