//! SVG renderer (in progress).
