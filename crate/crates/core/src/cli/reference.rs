//! Published alpha tables for `Π_3, ..., Π_6`.
//!
//! Subsets are written as digit strings (`"124"` is `{1, 2, 4}`, `""` is the
//! empty set).

pub const ALPHA_3: &[(&str, &str)] = &[
    ("", "1/24"),
    ("1", "11/72"),
    ("2", "7/36"),
    ("3", "11/72"),
    ("12", "1/2"),
    ("13", "1/2"),
    ("23", "1/2"),
    ("123", "1"),
];

pub const ALPHA_4: &[(&str, &str)] = &[
    ("", "1/120"),
    ("1", "5/144"),
    ("2", "7/144"),
    ("3", "7/144"),
    ("4", "5/144"),
    ("12", "7/48"),
    ("13", "13/72"),
    ("14", "5/36"),
    ("23", "5/24"),
    ("24", "13/72"),
    ("34", "7/48"),
    ("123", "1/2"),
    ("124", "1/2"),
    ("134", "1/2"),
    ("234", "1/2"),
    ("1234", "1"),
];

pub const ALPHA_5: &[(&str, &str)] = &[
    ("", "1/720"),
    ("1", "137/21600"),
    ("2", "101/10800"),
    ("3", "37/3600"),
    ("4", "101/10800"),
    ("5", "137/21600"),
    ("12", "1/32"),
    ("13", "1/24"),
    ("14", "1/24"),
    ("15", "1/36"),
    ("23", "5/96"),
    ("24", "1/18"),
    ("25", "1/24"),
    ("34", "5/96"),
    ("35", "1/24"),
    ("45", "1/32"),
    ("123", "17/120"),
    ("124", "31/180"),
    ("125", "19/144"),
    ("134", "47/240"),
    ("135", "1/6"),
    ("145", "19/144"),
    ("234", "13/60"),
    ("235", "47/240"),
    ("245", "31/180"),
    ("345", "17/120"),
    ("1234", "1/2"),
    ("1235", "1/2"),
    ("1245", "1/2"),
    ("1345", "1/2"),
    ("2345", "1/2"),
    ("12345", "1"),
];

pub const ALPHA_6: &[(&str, &str)] = &[
    ("", "1/5040"),
    ("1", "7/7200"),
    ("2", "1/675"),
    ("3", "37/21600"),
    ("4", "37/21600"),
    ("5", "1/675"),
    ("6", "7/7200"),
    ("12", "29/5400"),
    ("13", "1/135"),
    ("14", "541/64800"),
    ("15", "149/21600"),
    ("16", "151/32400"),
    ("23", "211/21600"),
    ("24", "719/64800"),
    ("25", "181/16200"),
    ("26", "149/21600"),
    ("34", "41/3600"),
    ("35", "719/64800"),
    ("36", "541/64800"),
    ("45", "211/21600"),
    ("46", "1/135"),
    ("56", "29/5400"),
    ("123", "7/240"),
    ("124", "3/80"),
    ("125", "11/288"),
    ("126", "7/288"),
    ("134", "11/240"),
    ("135", "7/144"),
    ("136", "5/144"),
    ("145", "13/288"),
    ("146", "5/144"),
    ("156", "7/288"),
    ("234", "13/240"),
    ("235", "17/288"),
    ("236", "13/288"),
    ("245", "17/288"),
    ("246", "7/144"),
    ("256", "11/288"),
    ("345", "13/240"),
    ("346", "11/240"),
    ("356", "3/80"),
    ("456", "7/240"),
    ("1234", "5/36"),
    ("1235", "1/6"),
    ("1236", "23/180"),
    ("1245", "3/16"),
    ("1246", "19/120"),
    ("1256", "1/8"),
    ("1345", "37/180"),
    ("1346", "11/60"),
    ("1356", "19/120"),
    ("1456", "23/180"),
    ("2345", "2/9"),
    ("2346", "37/180"),
    ("2356", "3/16"),
    ("2456", "1/6"),
    ("3456", "5/36"),
    ("12345", "1/2"),
    ("12346", "1/2"),
    ("12356", "1/2"),
    ("12456", "1/2"),
    ("13456", "1/2"),
    ("23456", "1/2"),
    ("123456", "1"),
];

/// Reference table for `n` in `3..=6`.
pub fn alpha_reference(n: usize) -> Option<&'static [(&'static str, &'static str)]> {
    match n {
        3 => Some(ALPHA_3),
        4 => Some(ALPHA_4),
        5 => Some(ALPHA_5),
        6 => Some(ALPHA_6),
        _ => None,
    }
}

/// `i(Δ_{k,6}, t)` coefficients, ascending, for `k = 1, 2, 3`.
pub const HYPERSIMPLEX_6: &[(usize, &[&str])] = &[
    (1, &["1", "137/60", "15/8", "17/24", "1/8", "1/120"]),
    (2, &["1", "101/30", "5", "47/12", "3/2", "13/60"]),
    (3, &["1", "37/10", "25/4", "23/4", "11/4", "11/20"]),
];
