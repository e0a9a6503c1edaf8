//! Output documents and parsers shared by the `privword` binary and its
//! integration tests.

pub mod output;
