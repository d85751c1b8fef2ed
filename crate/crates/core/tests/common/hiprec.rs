//! Fixed-point big-integer arithmetic used as an independent oracle for
//! closed-form constants: 120 working decimal digits, elementary functions
//! built from scratch (Taylor series for exp, atanh series for ln, integer
//! Newton for square roots), sharing no code path — and no floating
//! point — with the library under test. Comparisons against it therefore
//! catch transcription errors in formulas, not just rounding.

use num_bigint::BigInt;

const WORK_DIGITS: u32 = 120;

fn pow10(k: u32) -> BigInt {
    let ten = BigInt::from(10);
    let mut r = BigInt::from(1);
    for _ in 0..k {
        r *= &ten;
    }
    r
}

fn scale() -> BigInt {
    pow10(WORK_DIGITS)
}

/// A real number stored as round(value · 10¹²⁰).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fx(BigInt);

impl Fx {
    pub fn from_int(k: i64) -> Fx {
        Fx(BigInt::from(k) * scale())
    }

    /// Exact decimal mantissa·10^exp10, e.g. from_decimal(21, -2) = 0.21.
    pub fn from_decimal(mantissa: i64, exp10: i32) -> Fx {
        let shift = WORK_DIGITS as i32 + exp10;
        assert!(shift >= 0, "decimal below working precision");
        Fx(BigInt::from(mantissa) * pow10(shift as u32))
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Fx {
        Fx(-&self.0)
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx(&self.0 * &o.0 / scale())
    }

    pub fn div(&self, o: &Fx) -> Fx {
        Fx(&self.0 * scale() / &o.0)
    }

    fn div_int(&self, k: i64) -> Fx {
        Fx(&self.0 / BigInt::from(k))
    }

    pub fn is_zero(&self) -> bool {
        self.0 == BigInt::from(0)
    }

    pub fn powi(&self, mut k: u32) -> Fx {
        let mut base = self.clone();
        let mut acc = Fx::from_int(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Integer-Newton square root; requires a nonnegative value.
    pub fn sqrt(&self) -> Fx {
        let zero = BigInt::from(0);
        assert!(self.0 >= zero, "sqrt of negative");
        if self.0 == zero {
            return Fx(zero);
        }
        // isqrt(self.0 · 10¹²⁰) is the stored mantissa of the root.
        let n = &self.0 * scale();
        let digits = n.to_string().len() as u32;
        let mut x = pow10(digits / 2 + 1); // ≥ √n, so the iteration descends
        loop {
            let y = (&x + &n / &x) / BigInt::from(2);
            if y >= x {
                return Fx(x);
            }
            x = y;
        }
    }

    /// exp by argument halving to |r| ≤ 1/2, Taylor to exhaustion, and
    /// repeated squaring back up.
    pub fn exp(&self) -> Fx {
        if self.0 < BigInt::from(0) {
            return Fx::from_int(1).div(&self.neg().exp());
        }
        let half = scale() / BigInt::from(2);
        let mut r = self.clone();
        let mut halvings = 0u32;
        while r.0 > half {
            r = r.div_int(2);
            halvings += 1;
        }
        let mut term = Fx::from_int(1);
        let mut sum = Fx::from_int(1);
        let mut k: i64 = 1;
        loop {
            term = term.mul(&r).div_int(k);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
            k += 1;
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        sum
    }

    /// ln on [1, 10) via 2·atanh((a−1)/(a+1)).
    fn ln_small(&self) -> Fx {
        let one = Fx::from_int(1);
        let t = self.sub(&one).div(&self.add(&one));
        let t2 = t.mul(&t);
        let mut power = t.clone();
        let mut sum = t;
        let mut k: i64 = 1;
        loop {
            power = power.mul(&t2);
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power.div_int(2 * k + 1));
            k += 1;
        }
        sum.add(&sum)
    }

    /// Natural log for any positive value: normalize to a·10^e with
    /// a ∈ [1, 10), then ln a + e·(ln 2 + ln 5).
    pub fn ln(&self) -> Fx {
        assert!(self.0 > BigInt::from(0), "ln of nonpositive");
        let digits = self.0.to_string().len() as i32;
        let e = digits - WORK_DIGITS as i32 - 1;
        let mantissa = if e >= 0 {
            Fx(&self.0 / pow10(e as u32))
        } else {
            Fx(&self.0 * pow10((-e) as u32))
        };
        let mut r = mantissa.ln_small();
        if e != 0 {
            let ln10 = Fx::from_int(2).ln_small().add(&Fx::from_int(5).ln_small());
            r = r.add(&Fx(BigInt::from(e) * ln10.0));
        }
        r
    }

    pub fn pow(&self, y: &Fx) -> Fx {
        y.mul(&self.ln()).exp()
    }

    /// Leading significant digits and the exponent: value = ±0.DIGITS·10^exp.
    pub fn digits(&self, sig: usize) -> (String, i32) {
        let zero = BigInt::from(0);
        assert!(self.0 != zero, "no leading digits of zero");
        let mag = if self.0 < zero { -&self.0 } else { self.0.clone() };
        let s = mag.to_string();
        let exp = s.len() as i32 - WORK_DIGITS as i32;
        let take = sig.min(s.len());
        (s[..take].to_string(), exp)
    }

    pub fn to_f64(&self) -> f64 {
        if self.0 == BigInt::from(0) {
            return 0.0;
        }
        let (d, exp) = self.digits(25);
        let v: f64 = format!("0.{d}e{exp}").parse().unwrap();
        if self.0 < BigInt::from(0) {
            -v
        } else {
            v
        }
    }
}

/// Relative distance of a double against the oracle value.
pub fn rel_err(x: f64, oracle: &Fx) -> f64 {
    let o = oracle.to_f64();
    if o == 0.0 {
        x.abs()
    } else {
        ((x - o) / o).abs()
    }
}

/// Asserts that the oracle's leading 50 digits match a reference expansion.
pub fn assert_digits(value: &Fx, reference: &str, what: &str) {
    // Reference strings look like "2.7182818284…" or "0.0000469…" — strip
    // everything but significant digits.
    let clean: String = reference
        .chars()
        .filter(|c| c.is_ascii_digit())
        .skip_while(|&c| c == '0')
        .take(50)
        .collect();
    let (got, _) = value.digits(50);
    assert_eq!(got, clean, "{what}: oracle digits diverge from reference");
}
