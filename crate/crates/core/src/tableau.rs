//! Two-row tableaux over the alphabet `1 < 2 < 0 < -2 < -1`.
//!
//! The total order on tableaux of one shape scans cells from the rightmost
//! column to the leftmost, top cell before bottom cell, and compares the first
//! differing letter. That scan is the tableau's [`Tableau::scan_word`]; the
//! order is lexicographic on scan words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Letter, Shape, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    shape: Shape,
    row1: Vec<Letter>,
    row2: Vec<Letter>,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Shape,
    row1: Vec<Letter>,
    row2: Vec<Letter>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Tableau> {
        Tableau::new(raw.shape, raw.row1, raw.row2)
    }
}

impl Tableau {
    pub fn new(shape: Shape, row1: Vec<Letter>, row2: Vec<Letter>) -> Result<Tableau> {
        if row1.len() != shape.l1() as usize || row2.len() != shape.l2() as usize {
            return Err(Error::RowLengths {
                shape,
                row1: row1.len(),
                row2: row2.len(),
            });
        }
        Ok(Tableau { shape, row1, row2 })
    }

    /// Builds a tableau from its rows, inferring the shape.
    pub fn from_rows(row1: Vec<Letter>, row2: Vec<Letter>) -> Result<Tableau> {
        let shape =
            Shape::new(row1.len() as u32, row2.len() as u32).map_err(|_| Error::InvalidShape {
                l1: row1.len() as i64,
                l2: row2.len() as i64,
            })?;
        Tableau::new(shape, row1, row2)
    }

    /// Rows given as letter codes, e.g. `[1, 0, -1]` / `[2, 0]`.
    pub fn from_codes(row1: &[i64], row2: &[i64]) -> Result<Tableau> {
        let conv = |r: &[i64]| {
            r.iter()
                .map(|&c| Letter::from_code(c))
                .collect::<Result<Vec<_>>>()
        };
        Tableau::from_rows(conv(row1)?, conv(row2)?)
    }

    /// All 1s in the first row over all 2s in the second.
    pub fn highest(shape: Shape) -> Tableau {
        Tableau {
            shape,
            row1: vec![Letter::One; shape.l1() as usize],
            row2: vec![Letter::Two; shape.l2() as usize],
        }
    }

    /// Inverse of [`Tableau::scan_word`].
    pub fn from_scan_word(shape: Shape, word: &[Letter]) -> Result<Tableau> {
        let (l1, l2) = (shape.l1() as usize, shape.l2() as usize);
        if word.len() != l1 + l2 {
            return Err(Error::RowLengths {
                shape,
                row1: word.len(),
                row2: 0,
            });
        }
        let m1 = l1 - l2;
        let mut row1 = vec![Letter::One; l1];
        let mut row2 = vec![Letter::One; l2];
        for (k, &x) in word[..m1].iter().enumerate() {
            row1[l1 - 1 - k] = x;
        }
        for (k, pair) in word[m1..].chunks(2).enumerate() {
            row1[l2 - 1 - k] = pair[0];
            row2[l2 - 1 - k] = pair[1];
        }
        Ok(Tableau { shape, row1, row2 })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn row1(&self) -> &[Letter] {
        &self.row1
    }

    pub fn row2(&self) -> &[Letter] {
        &self.row2
    }

    /// Cells in comparison order: rightmost column first, top before bottom.
    pub fn scan_word(&self) -> Vec<Letter> {
        let (l1, l2) = (self.row1.len(), self.row2.len());
        let mut word = Vec::with_capacity(l1 + l2);
        word.extend(self.row1[l2..].iter().rev());
        for j in (0..l2).rev() {
            word.push(self.row1[j]);
            word.push(self.row2[j]);
        }
        word
    }

    /// Height-two columns as `(top, bottom)`, left to right.
    pub fn tall_columns(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.row1.iter().copied().zip(self.row2.iter().copied())
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.row1.iter().chain(self.row2.iter()).copied()
    }

    /// ASCII rendering: one row per line, cells right-aligned to width 2.
    pub fn to_ascii(&self) -> String {
        let render = |row: &[Letter]| {
            row.iter()
                .map(|l| format!("{:>2}", l.code()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = render(&self.row1);
        if !self.row2.is_empty() {
            out.push('\n');
            out.push_str(&render(&self.row2));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[Letter]| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}]/[{}]", row(&self.row1), row(&self.row2))
    }
}

fn column_strict(top: Letter, bottom: Letter) -> bool {
    top < bottom || (top == Letter::Zero && bottom == Letter::Zero)
}

/// Columns strictly increase downward, except that `0` may sit over `0`. Rows are free.
pub fn is_cst(t: &Tableau) -> bool {
    t.tall_columns().all(|(a, b)| column_strict(a, b))
}

/// The Kashiwara-Nakashima conditions for spo(4|1).
///
/// Two adjacent columns are forbidden when the left column has `2` or `0` on
/// top and the right column has `-2` at the bottom.
pub fn is_kn(t: &Tableau) -> bool {
    let row_ok = |row: &[Letter]| {
        row.windows(2).all(|w| w[0] <= w[1])
            && row.iter().filter(|&&x| x == Letter::Zero).count() <= 1
    };
    if !row_ok(&t.row1) || !row_ok(&t.row2) || !is_cst(t) {
        return false;
    }
    if t.tall_columns()
        .any(|(a, b)| a == Letter::One && b == Letter::OneBar)
    {
        return false;
    }
    let l2 = t.row2.len();
    !(0..l2.saturating_sub(1))
        .any(|j| matches!(t.row1[j], Letter::Two | Letter::Zero) && t.row2[j + 1] == Letter::TwoBar)
}

pub fn tableau_weight(t: &Tableau) -> Weight {
    t.letters().map(Letter::weight).sum()
}

pub fn compare_tableaux(a: &Tableau, b: &Tableau) -> Result<Ordering> {
    if a.shape != b.shape {
        return Err(Error::ShapeMismatch(a.shape, b.shape));
    }
    Ok(a.scan_word().cmp(&b.scan_word()))
}

/// A column in a tableau: one cell or two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Column {
    Short(Letter),
    Tall(Letter, Letter),
}

impl Column {
    fn top(self) -> Letter {
        match self {
            Column::Short(a) | Column::Tall(a, _) => a,
        }
    }

    fn bottom(self) -> Option<Letter> {
        match self {
            Column::Short(_) => None,
            Column::Tall(_, b) => Some(b),
        }
    }
}

/// Column candidates in scan-word order.
fn candidates(tall: bool) -> Vec<Column> {
    if !tall {
        return Letter::ALL.iter().map(|&a| Column::Short(a)).collect();
    }
    let mut out = Vec::with_capacity(11);
    for a in Letter::ALL {
        for b in Letter::ALL {
            if column_strict(a, b) {
                out.push(Column::Tall(a, b));
            }
        }
    }
    out
}

fn kn_column(c: Column) -> bool {
    !matches!(c, Column::Tall(Letter::One, Letter::OneBar))
}

/// Whether `left` may stand immediately left of `right` in a KN tableau.
fn kn_adjacent(left: Column, right: Column) -> bool {
    let (lt, rt) = (left.top(), right.top());
    if lt > rt || (lt == Letter::Zero && rt == Letter::Zero) {
        return false;
    }
    if let (Some(lb), Some(rb)) = (left.bottom(), right.bottom()) {
        if lb > rb || (lb == Letter::Zero && rb == Letter::Zero) {
            return false;
        }
    }
    !(matches!(lt, Letter::Two | Letter::Zero) && right.bottom() == Some(Letter::TwoBar))
}

struct Filler {
    shape: Shape,
    kn: bool,
    short: Vec<Column>,
    tall: Vec<Column>,
    // columns chosen so far, right to left
    cols: Vec<Column>,
    out: Vec<Tableau>,
}

impl Filler {
    fn fill(&mut self, j: usize) {
        if j == 0 {
            let mut row1 = Vec::with_capacity(self.cols.len());
            let mut row2 = Vec::with_capacity(self.shape.l2() as usize);
            for c in self.cols.iter().rev() {
                row1.push(c.top());
                if let Some(b) = c.bottom() {
                    row2.push(b);
                }
            }
            self.out.push(Tableau {
                shape: self.shape,
                row1,
                row2,
            });
            return;
        }
        let col = j - 1;
        let tall = col < self.shape.l2() as usize;
        let count = if tall {
            self.tall.len()
        } else {
            self.short.len()
        };
        for i in 0..count {
            let c = if tall { self.tall[i] } else { self.short[i] };
            if self.kn {
                if !kn_column(c) {
                    continue;
                }
                if let Some(&right) = self.cols.last() {
                    if !kn_adjacent(c, right) {
                        continue;
                    }
                }
            }
            self.cols.push(c);
            self.fill(col);
            self.cols.pop();
        }
    }
}

/// Fillings generated column by column, rightmost first, so output is sorted.
fn enumerate(shape: Shape, kn: bool) -> Vec<Tableau> {
    let mut filler = Filler {
        shape,
        kn,
        short: candidates(false),
        tall: candidates(true),
        cols: Vec::with_capacity(shape.l1() as usize),
        out: Vec::new(),
    };
    filler.fill(shape.l1() as usize);
    filler.out
}

/// All column-strict tableaux of the shape, ascending.
pub fn enumerate_cst(shape: Shape) -> Vec<Tableau> {
    enumerate(shape, false)
}

/// All KN tableaux of the shape, ascending.
pub fn enumerate_kn(shape: Shape) -> Vec<Tableau> {
    enumerate(shape, true)
}

/// `|KN(shape)|` by a transfer-matrix count over columns, without enumeration.
pub fn count_kn(shape: Shape) -> u128 {
    let (l1, l2) = (shape.l1() as usize, shape.l2() as usize);
    if l1 == 0 {
        return 1;
    }
    let short = candidates(false);
    let tall = candidates(true);
    let cands = |col: usize| if col < l2 { &tall } else { &short };
    // counts[i]: number of valid fillings of columns col..l1 whose column col is cands(col)[i]
    let mut counts: Vec<u128> = cands(l1 - 1)
        .iter()
        .map(|&c| u128::from(kn_column(c)))
        .collect();
    for col in (0..l1 - 1).rev() {
        let right = cands(col + 1);
        counts = cands(col)
            .iter()
            .map(|&c| {
                if !kn_column(c) {
                    return 0;
                }
                right
                    .iter()
                    .zip(&counts)
                    .filter(|(&r, _)| kn_adjacent(c, r))
                    .map(|(_, &n)| n)
                    .sum()
            })
            .collect();
    }
    counts.iter().sum()
}
