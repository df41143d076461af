//! Generators, words, elements, presentations and Hopf structure.

pub mod element;
pub mod gen;
pub mod text;

pub use element::{AlgElement, TensorElement};
pub use gen::{Gen, Kind, TorusFamily, Word};
pub use text::{format_element, format_tensor, format_word, parse_element, parse_tensor};
pub mod presentation;

pub use presentation::{AlgebraKind, Confluence, Presentation};
pub mod hopf;

pub use hopf::{tensor_mul, tensor_normal_form, HopfAlgebra};
pub mod braided;

pub use braided::{project_first, sl2_antipode_closed, sl2_delta0_closed, BraidedBminus};
