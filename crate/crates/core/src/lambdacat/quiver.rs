use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// One summand `coef * path` of a relation; paths list arrow indices in the
/// order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: u32,
    pub path: Vec<usize>,
}

/// Finite quiver with admissible relations over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub p: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<Term>>,
}

impl BoundQuiver {
    pub fn new(p: u32, vertices: Vec<String>, arrows: Vec<Arrow>, relations: Vec<Vec<Term>>) -> Result<Self> {
        let q = BoundQuiver { p, vertices, arrows, relations };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::Schema(format!("duplicate vertex {v}")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.src >= n || a.tgt >= n {
                return Err(Error::Schema(format!("arrow {} has an unknown endpoint", a.id)));
            }
            if self.arrows[..i].iter().any(|b| b.id == a.id) {
                return Err(Error::Schema(format!("duplicate arrow {}", a.id)));
            }
        }
        for (r, rel) in self.relations.iter().enumerate() {
            let mut ends = None;
            for t in rel {
                if t.path.len() < 2 {
                    return Err(Error::Schema(format!("relation {r} has a path of length < 2")));
                }
                if t.path.iter().any(|&a| a >= self.arrows.len()) {
                    return Err(Error::Schema(format!("relation {r} uses an unknown arrow")));
                }
                for w in t.path.windows(2) {
                    if self.arrows[w[0]].tgt != self.arrows[w[1]].src {
                        return Err(Error::Schema(format!("relation {r} has a non-composable path")));
                    }
                }
                let e = (self.arrows[t.path[0]].src, self.arrows[*t.path.last().unwrap()].tgt);
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Schema(format!("relation {r} mixes paths with different endpoints")));
                }
            }
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].tgt == v)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }
}
