//! Hausdorff distance between unordered configurations of the flat torus.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::literal::Cursor;

/// Point of `R²/Z²`, coordinates reduced to `[0,1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    x: f64,
    y: f64,
}

fn reduce(t: f64) -> f64 {
    let r = t.rem_euclid(1.0);
    // rem_euclid rounds tiny negative inputs up to exactly 1.0
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

impl TorusPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::domain(format!("torus coordinates must be finite, got ({x},{y})")));
        }
        Ok(TorusPoint { x: reduce(x), y: reduce(y) })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    fn parse_cursor(cur: &mut Cursor) -> Result<Self> {
        cur.expect('(')?;
        let x = cur.float()?;
        cur.expect(',')?;
        let y = cur.float()?;
        cur.expect(')')?;
        TorusPoint::new(x, y)
    }
}

/// Flat distance: the shortest Euclidean distance between lifts.
pub fn torus_dist(p: &TorusPoint, q: &TorusPoint) -> f64 {
    let mut best = f64::INFINITY;
    for i in -1..=1 {
        for j in -1..=1 {
            let d = (p.x - q.x + f64::from(i)).hypot(p.y - q.y + f64::from(j));
            best = best.min(d);
        }
    }
    best
}

/// `n ≥ 1` pairwise distinct points; the order carries no meaning.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    points: Vec<TorusPoint>,
}

impl Configuration {
    pub fn new(points: Vec<TorusPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::domain("a configuration needs at least one point"));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::domain(format!("configuration points must be distinct, ({},{}) repeats", p.x, p.y)));
            }
        }
        Ok(Configuration { points })
    }

    pub fn points(&self) -> &[TorusPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn dist_to(&self, p: &TorusPoint) -> f64 {
        self.points.iter().map(|q| torus_dist(p, q)).fold(f64::INFINITY, f64::min)
    }
}

/// `max(max_i d(zᵢ, w), max_i d(wᵢ, z))` with `d(p, w) = min_j d(p, wⱼ)`.
pub fn hausdorff(z: &Configuration, w: &Configuration) -> Result<f64> {
    if z.len() != w.len() {
        return Err(Error::domain(format!(
            "configurations have {} and {} points; the distance is defined for equal sizes",
            z.len(),
            w.len()
        )));
    }
    let one = z.points.iter().map(|p| w.dist_to(p)).fold(0.0, f64::max);
    let other = w.points.iter().map(|p| z.dist_to(p)).fold(0.0, f64::max);
    Ok(one.max(other))
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.x, self.y)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for TorusPoint {
    type Err = Error;

    /// `(x,y)`
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let p = Self::parse_cursor(&mut cur)?;
        cur.finish()?;
        Ok(p)
    }
}

impl FromStr for Configuration {
    type Err = Error;

    /// `{(x,y);(x,y);...}`
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect('{')?;
        let mut points = vec![TorusPoint::parse_cursor(&mut cur)?];
        while cur.eat(';') {
            points.push(TorusPoint::parse_cursor(&mut cur)?);
        }
        cur.expect('}')?;
        cur.finish()?;
        Configuration::new(points)
    }
}
