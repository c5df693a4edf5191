#pragma once

#include <filesystem>

#include "levelset/grid.hpp"

namespace levelset {

/// A value field read back from disk together with its grid geometry and
/// the solve time it was captured at.  Boundary tags are not stored in the
/// format; reconstructed grids default to linear extrapolation.
struct Snapshot {
    GridPtr grid;
    ScalarField field;
    double time = 0.0;
};

/// Writes a field as a snapshot file: a plain-text header of the lines
///   dims N
///   counts n0 n1 ...
///   mins m0 m1 ...
///   maxs M0 M1 ...
///   time T
/// followed by the raw little-endian IEEE-754 float64 payload in
/// column-major node order.  Header reals are printed with enough digits to
/// round-trip exactly; the payload is byte-exact.
void write_snapshot(const std::filesystem::path& path, const ScalarField& field, double time);

/// Reads a snapshot file written by write_snapshot.
Snapshot read_snapshot(const std::filesystem::path& path);

} // namespace levelset
