pub mod compute;
pub mod family;
pub mod fcurve;
pub mod scan;
