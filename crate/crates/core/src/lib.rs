pub mod algebra;
pub mod catalog;
pub mod claims;
pub mod endo;
pub mod enumerate;
pub mod ideals;
pub mod linalg;
pub mod module;
pub mod mutation;
pub mod preprojective;
pub mod quiver;
pub mod random;
pub mod report;
pub mod silting;
pub mod theory;
pub mod weyl;
