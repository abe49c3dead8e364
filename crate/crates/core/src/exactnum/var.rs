use core::fmt;

/// Formal variables, declared in canonical print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    U,
    /// The outer grading variable (printed `T`).
    Tg,
    P,
    Z,
    W,
    A,
    B,
    C,
    D,
    V,
    Zs,
    Wv,
    S,
    T1,
    T2,
    X(u8),
    Y(u8),
}

impl Var {
    pub fn name(self) -> VarName {
        VarName(self)
    }

    pub fn parse(s: &str) -> Option<Var> {
        Some(match s {
            "q" => Var::Q,
            "t" => Var::T,
            "u" => Var::U,
            "T" => Var::Tg,
            "p" => Var::P,
            "Z" => Var::Z,
            "W" => Var::W,
            "a" => Var::A,
            "b" => Var::B,
            "c" => Var::C,
            "d" => Var::D,
            "v" => Var::V,
            "w" => Var::Wv,
            "z" => Var::Zs,
            "s" => Var::S,
            "t1" => Var::T1,
            "t2" => Var::T2,
            _ => {
                let (head, idx) = s.split_at(1);
                let i: u8 = idx.parse().ok()?;
                match head {
                    "x" => Var::X(i),
                    "y" => Var::Y(i),
                    _ => return None,
                }
            }
        })
    }
}

pub struct VarName(Var);

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            Var::Q => "q",
            Var::T => "t",
            Var::U => "u",
            Var::Tg => "T",
            Var::P => "p",
            Var::Z => "Z",
            Var::W => "W",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
            Var::V => "v",
            Var::Wv => "w",
            Var::Zs => "z",
            Var::S => "s",
            Var::T1 => "t1",
            Var::T2 => "t2",
            Var::X(i) => return write!(f, "x{}", i),
            Var::Y(i) => return write!(f, "y{}", i),
        };
        f.write_str(s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name().fmt(f)
    }
}

/// Maximum number of variables in one series.
pub const MAXV: usize = 10;

/// Exponent vector, indexed by position in the owning series' variable list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [i16; MAXV]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAXV]);

    #[inline]
    pub fn get(&self, i: usize) -> i32 {
        self.0[i] as i32
    }

    #[inline]
    pub fn set(&mut self, i: usize, e: i32) {
        self.0[i] = e as i16;
    }

    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = [0i16; MAXV];
        for i in 0..MAXV {
            out[i] = self.0[i] + other.0[i];
        }
        Mono(out)
    }

    #[inline]
    pub fn inv(&self) -> Mono {
        let mut out = self.0;
        for e in out.iter_mut() {
            *e = -*e;
        }
        Mono(out)
    }

    #[inline]
    pub fn pow(&self, r: i32) -> Mono {
        let mut out = self.0;
        for e in out.iter_mut() {
            *e = (*e as i32 * r) as i16;
        }
        Mono(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// A signed monomial `c * m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub c: super::Rational,
    pub m: Mono,
}

impl Term {
    pub fn new(c: super::Rational, m: Mono) -> Term {
        Term { c, m }
    }

    pub fn one() -> Term {
        Term { c: super::Rational::ONE, m: Mono::ONE }
    }

    pub fn mono(m: Mono) -> Term {
        Term { c: super::Rational::ONE, m }
    }

    pub fn constant(c: super::Rational) -> Term {
        Term { c, m: Mono::ONE }
    }

    pub fn mul(&self, o: &Term) -> Term {
        Term { c: &self.c * &o.c, m: self.m.mul(&o.m) }
    }

    /// Panics on a zero coefficient raised to a negative power.
    pub fn pow(&self, e: i32) -> Term {
        Term {
            c: self.c.pow(e).expect("zero raised to a negative power"),
            m: self.m.pow(e),
        }
    }

    pub fn inv(&self) -> Term {
        self.pow(-1)
    }

    pub fn neg(&self) -> Term {
        Term { c: -&self.c, m: self.m }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }
}
