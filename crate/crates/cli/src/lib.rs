//! Support library for the `entwit` binary: the textual formats it reads and
//! writes, kept separate so tests can round-trip files through the same code.

pub mod io;
