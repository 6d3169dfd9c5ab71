//! Uniform cell-centered grids in one and two dimensions.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Boundary handling for a run. Fixed once per domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    /// Opposite faces identified; fields wrap around.
    Periodic,
    /// Box with no-flux walls; normal components vanish at faces.
    NofluxBox,
}

/// A uniform grid on an axis-aligned box.
///
/// Densities and fields are stored at cell centers, row-major in 2D
/// (`index = iy * nx + ix`). All integrals over the box are midpoint sums
/// weighted by the cell volume.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    dim: usize,
    nx: usize,
    ny: usize,
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    boundary: Boundary,
}

impl Domain {
    pub fn new_1d(x0: f64, x1: f64, nx: usize, boundary: Boundary) -> Result<Self> {
        if !(x1 > x0) || !x0.is_finite() || !x1.is_finite() {
            return Err(Error::InvalidArgument {
                name: "extent",
                msg: format!("need x0 < x1 finite, got [{x0}, {x1}]"),
            });
        }
        if nx == 0 {
            return Err(Error::InvalidArgument {
                name: "cells",
                msg: "need at least one cell".into(),
            });
        }
        Ok(Domain {
            dim: 1,
            nx,
            ny: 1,
            x0,
            x1,
            y0: 0.0,
            y1: 0.0,
            boundary,
        })
    }

    pub fn new_2d(
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
        nx: usize,
        ny: usize,
        boundary: Boundary,
    ) -> Result<Self> {
        if !(x1 > x0 && y1 > y0) {
            return Err(Error::InvalidArgument {
                name: "extent",
                msg: format!("need x0 < x1 and y0 < y1, got [{x0},{x1}]x[{y0},{y1}]"),
            });
        }
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidArgument {
                name: "cells",
                msg: "need at least one cell per axis".into(),
            });
        }
        Ok(Domain {
            dim: 2,
            nx,
            ny,
            x0,
            x1,
            y0,
            y1,
            boundary,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Total number of cells.
    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn x_extent(&self) -> (f64, f64) {
        (self.x0, self.x1)
    }

    pub fn y_extent(&self) -> (f64, f64) {
        (self.y0, self.y1)
    }

    pub fn dx(&self) -> f64 {
        (self.x1 - self.x0) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        if self.dim == 2 {
            (self.y1 - self.y0) / self.ny as f64
        } else {
            1.0
        }
    }

    /// Cell volume, `dx` in 1D and `dx*dy` in 2D.
    pub fn cell_volume(&self) -> f64 {
        if self.dim == 1 {
            self.dx()
        } else {
            self.dx() * self.dy()
        }
    }

    /// Length of the box on each axis.
    pub fn side_x(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn side_y(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        debug_assert!(ix < self.nx && iy < self.ny);
        iy * self.nx + ix
    }

    pub fn split_index(&self, idx: usize) -> (usize, usize) {
        (idx % self.nx, idx / self.nx)
    }

    /// Center of cell `(ix, iy)`.
    pub fn center(&self, ix: usize, iy: usize) -> [f64; 2] {
        let cx = self.x0 + (ix as f64 + 0.5) * self.dx();
        let cy = if self.dim == 2 {
            self.y0 + (iy as f64 + 0.5) * self.dy()
        } else {
            0.0
        };
        [cx, cy]
    }

    pub fn center_of(&self, idx: usize) -> [f64; 2] {
        let (ix, iy) = self.split_index(idx);
        self.center(ix, iy)
    }

    /// Squared Euclidean norm of a cell center (the `|x|²` weight).
    pub fn center_norm_sq(&self, idx: usize) -> f64 {
        let c = self.center_of(idx);
        c[0] * c[0] + c[1] * c[1]
    }

    /// Wrap a point into the box (periodic) or clamp it to the box interior.
    pub fn confine(&self, p: [f64; 2]) -> [f64; 2] {
        match self.boundary {
            Boundary::Periodic => {
                let lx = self.side_x();
                let mut x = (p[0] - self.x0).rem_euclid(lx) + self.x0;
                // rem_euclid can return exactly lx for tiny negatives
                if x >= self.x1 {
                    x -= lx;
                }
                let mut y = p[1];
                if self.dim == 2 {
                    let ly = self.side_y();
                    y = (p[1] - self.y0).rem_euclid(ly) + self.y0;
                    if y >= self.y1 {
                        y -= ly;
                    }
                }
                [x, y]
            }
            Boundary::NofluxBox => {
                let x = p[0].clamp(self.x0, self.x1);
                let y = if self.dim == 2 {
                    p[1].clamp(self.y0, self.y1)
                } else {
                    p[1]
                };
                [x, y]
            }
        }
    }

    pub fn same_grid(&self, other: &Domain) -> bool {
        self == other
    }

    pub fn check_same_grid(&self, other: &Domain, what: &str) -> Result<()> {
        if self.same_grid(other) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "{what}: {self:?} vs {other:?}"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_centers_1d() {
        let d = Domain::new_1d(-1.0, 1.0, 4, Boundary::NofluxBox).unwrap();
        assert_eq!(d.dx(), 0.5);
        assert_eq!(d.center(0, 0)[0], -0.75);
        assert_eq!(d.center(3, 0)[0], 0.75);
        assert_eq!(d.cell_volume(), 0.5);
    }

    #[test]
    fn confine_wraps_periodic() {
        let d = Domain::new_2d(0.0, 1.0, 0.0, 2.0, 8, 8, Boundary::Periodic).unwrap();
        let p = d.confine([1.25, -0.5]);
        assert!((p[0] - 0.25).abs() < 1e-15);
        assert!((p[1] - 1.5).abs() < 1e-15);
    }

    #[test]
    fn confine_clamps_box() {
        let d = Domain::new_1d(-1.0, 1.0, 4, Boundary::NofluxBox).unwrap();
        assert_eq!(d.confine([3.0, 0.0])[0], 1.0);
        assert_eq!(d.confine([-9.0, 0.0])[0], -1.0);
    }

    #[test]
    fn degenerate_extent_rejected() {
        assert!(Domain::new_1d(1.0, 1.0, 4, Boundary::NofluxBox).is_err());
        assert!(Domain::new_1d(-1.0, 1.0, 0, Boundary::NofluxBox).is_err());
    }
}
