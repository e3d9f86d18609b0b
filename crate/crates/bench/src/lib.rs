pub use accordion_core;
