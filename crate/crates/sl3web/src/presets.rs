//! Named webs used by the command line and the examples.

use crate::flows::ClosedWeb;
use crate::ladderweb::LadderWeb;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub word: &'static str,
    pub n: usize,
    pub ell: usize,
    /// Whether the ladder itself is closed; otherwise the closed web is the
    /// ladder glued to its own reflection.
    pub closed_ladder: bool,
}

pub const PRESETS: &[Preset] = &[
    Preset { name: "arc", word: "F1", n: 2, ell: 1, closed_ladder: false },
    Preset { name: "circle", word: "F1^2 F1", n: 2, ell: 1, closed_ladder: true },
    Preset { name: "theta", word: "F1 F2 F1", n: 3, ell: 1, closed_ladder: false },
    Preset {
        name: "hexagon",
        word: "F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2",
        n: 6,
        ell: 3,
        closed_ladder: false,
    },
    Preset { name: "circles-nested", word: "F2 F1^2 F3^2 F2^2", n: 4, ell: 2, closed_ladder: false },
    Preset { name: "circles-split", word: "F1^2 F2 F3^2 F2^2", n: 4, ell: 2, closed_ladder: false },
];

pub fn preset(name: &str) -> Result<Preset, Error> {
    PRESETS.iter().copied().find(|p| p.name == name).ok_or_else(|| {
        let names: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
        Error::Parse(format!("unknown preset {name:?}, expected one of {}", names.join(", ")))
    })
}

impl Preset {
    pub fn web(&self) -> LadderWeb {
        let word = self.word.parse().expect("preset words parse");
        LadderWeb::build(&word, self.n, self.ell).expect("preset fits").expect("preset is nonzero")
    }

    pub fn closed(&self) -> ClosedWeb {
        let w = self.web();
        if self.closed_ladder {
            ClosedWeb::ladder(w).expect("closed preset")
        } else {
            ClosedWeb::pair(w.clone(), w).expect("same boundary")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Laurent;

    #[test]
    fn all_presets_build() {
        for p in PRESETS {
            let w = p.web();
            let closed = w.top().iter().all(|&x| x == 0 || x == 3);
            assert_eq!(closed, p.closed_ladder, "{}", p.name);
            assert!(w.is_non_elliptic() || p.closed_ladder, "{}", p.name);
        }
        assert!(preset("square").is_err());
    }

    #[test]
    fn brackets() {
        assert_eq!(preset("circle").unwrap().closed().bracket(), Laurent::qint(3).unwrap());
        let theta = Laurent::qint(2).unwrap() * Laurent::qint(3).unwrap();
        assert_eq!(preset("theta").unwrap().closed().bracket(), theta);
    }
}
