use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("matrix group closure exceeded {classes} phase classes after {rounds} product rounds")]
    NonClosure { classes: usize, rounds: usize },

    #[error("transformation matrix is not unitary (defect {defect:e})")]
    NotUnitary { defect: f64 },

    #[error("field component {component} is non-zero but has no slot in layout {layout}")]
    LayoutViolation {
        component: &'static str,
        layout: String,
    },

    #[error("operation requires real-valued fields")]
    NotRealMode,

    #[error("finite-difference truncation estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    GridTooCoarse { estimate: f64, tolerance: f64 },

    #[error("{0} out of domain: {1}")]
    Domain(&'static str, f64),

    #[error("quadrature did not converge: last change {change:e} at {points} points")]
    QuadratureNotConverged { change: f64, points: usize },

    #[error("amplitude E0 is not set on the torus model")]
    AmplitudeUnset,

    #[error("momentum is not along the layout axis {axis}")]
    AxisMismatch { axis: crate::linalg::Axis },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
