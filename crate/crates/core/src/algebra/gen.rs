use std::fmt;

/// Generator families across the quantum double and the Heisenberg double.
///
/// The declaration order is the order used when printing and when sorting
/// words in a `BTreeMap`; normal-order blocks are decided by [`Gen::block`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// `F_i`
    F,
    /// `f_i`
    Fl,
    /// `K_i`
    K,
    /// `K_i^-1`
    KInv,
    /// `K_i'`
    Kp,
    /// `K_i'^-1`
    KpInv,
    /// `w_i` (omega)
    W,
    /// `w_i^-1`
    WInv,
    /// `w_i'`
    Wp,
    /// `w_i'^-1`
    WpInv,
    /// `E_i`
    E,
    /// `e_i'`
    Ep,
}

/// Which of the two torus characters a torus letter realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusFamily {
    /// `K_i`, `w_i`: conjugation scales degree `b` by `r^<b,i> s^-<i,b>`.
    Unprimed,
    /// `K_i'`, `w_i'`: conjugation scales degree `b` by `r^-<i,b> s^<b,i>`.
    Primed,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: Kind,
    pub idx: u8,
}

pub type Word = Vec<Gen>;

impl Gen {
    pub const fn new(kind: Kind, idx: u8) -> Gen {
        Gen { kind, idx }
    }

    pub fn is_torus(self) -> bool {
        matches!(
            self.kind,
            Kind::K
                | Kind::KInv
                | Kind::Kp
                | Kind::KpInv
                | Kind::W
                | Kind::WInv
                | Kind::Wp
                | Kind::WpInv
        )
    }

    pub fn is_raising(self) -> bool {
        matches!(self.kind, Kind::E | Kind::Ep)
    }

    pub fn is_lowering(self) -> bool {
        matches!(self.kind, Kind::F | Kind::Fl)
    }

    /// Normal-order block: lowering < torus < raising.
    pub fn block(self) -> u8 {
        if self.is_lowering() {
            0
        } else if self.is_torus() {
            1
        } else {
            2
        }
    }

    /// Sign of the root-lattice degree: `+1` raising, `-1` lowering, `0` torus.
    pub fn degree_sign(self) -> i32 {
        if self.is_raising() {
            1
        } else if self.is_lowering() {
            -1
        } else {
            0
        }
    }

    pub fn inverse(self) -> Option<Gen> {
        let k = match self.kind {
            Kind::K => Kind::KInv,
            Kind::KInv => Kind::K,
            Kind::Kp => Kind::KpInv,
            Kind::KpInv => Kind::Kp,
            Kind::W => Kind::WInv,
            Kind::WInv => Kind::W,
            Kind::Wp => Kind::WpInv,
            Kind::WpInv => Kind::Wp,
            _ => return None,
        };
        Some(Gen::new(k, self.idx))
    }

    /// `(family, exponent sign)` for torus letters.
    pub fn torus_family(self) -> Option<(TorusFamily, i64)> {
        Some(match self.kind {
            Kind::K | Kind::W => (TorusFamily::Unprimed, 1),
            Kind::KInv | Kind::WInv => (TorusFamily::Unprimed, -1),
            Kind::Kp | Kind::Wp => (TorusFamily::Primed, 1),
            Kind::KpInv | Kind::WpInv => (TorusFamily::Primed, -1),
            _ => return None,
        })
    }

    /// Sort key inside the torus block; a letter and its inverse share a key.
    pub fn torus_key(self) -> (u8, u8) {
        let fam = match self.kind {
            Kind::K | Kind::KInv => 0,
            Kind::Kp | Kind::KpInv => 1,
            Kind::W | Kind::WInv => 2,
            _ => 3,
        };
        (fam, self.idx)
    }

    /// Base name without inverse marker, e.g. `K1'`.
    pub fn base_name(self) -> String {
        let i = self.idx as usize + 1;
        match self.kind {
            Kind::E => format!("E{i}"),
            Kind::F => format!("F{i}"),
            Kind::K | Kind::KInv => format!("K{i}"),
            Kind::Kp | Kind::KpInv => format!("K{i}'"),
            Kind::W | Kind::WInv => format!("w{i}"),
            Kind::Wp | Kind::WpInv => format!("w{i}'"),
            Kind::Ep => format!("e{i}'"),
            Kind::Fl => format!("f{i}"),
        }
    }

    pub fn is_inverse_letter(self) -> bool {
        matches!(
            self.kind,
            Kind::KInv | Kind::KpInv | Kind::WInv | Kind::WpInv
        )
    }

    /// Resolves a base name (`E1`, `K2'`, `w1`, `e1'`, ...). A missing index means 1.
    pub fn from_name(name: &str) -> Option<Gen> {
        let (body, primed) = match name.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (name, false),
        };
        let split = body
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(body.len());
        let (head, digits) = body.split_at(split);
        let idx: usize = if digits.is_empty() {
            1
        } else {
            digits.parse().ok()?
        };
        if idx == 0 || idx > 255 {
            return None;
        }
        let kind = match (head, primed) {
            ("E", false) => Kind::E,
            ("F", false) => Kind::F,
            ("K", false) => Kind::K,
            ("K", true) => Kind::Kp,
            ("w", false) => Kind::W,
            ("w", true) => Kind::Wp,
            ("e", true) => Kind::Ep,
            ("f", false) => Kind::Fl,
            _ => return None,
        };
        Some(Gen::new(kind, (idx - 1) as u8))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse_letter() {
            write!(f, "{}^-1", self.base_name())
        } else {
            write!(f, "{}", self.base_name())
        }
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Root-lattice degree of a word.
pub fn word_degree(w: &[Gen], rank: usize) -> Vec<i64> {
    let mut d = vec![0i64; rank];
    for g in w {
        let s = g.degree_sign();
        if s != 0 {
            d[g.idx as usize] += s as i64;
        }
    }
    d
}

pub fn word_len_nontorus(w: &[Gen]) -> usize {
    w.iter().filter(|g| !g.is_torus()).count()
}
