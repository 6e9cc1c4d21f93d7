#pragma once

#include <iosfwd>
#include <string>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/mesh.hpp"
#include "slotbrillouin/optical.hpp"

namespace slotbrillouin {

// Plain-text dumps. Numbers use the shortest representation that parses back
// to the same double, so write -> read reproduces every value bit for bit.
// Grids are written one row per line, row j = 0 (bottom) first.

void write_mesh(std::ostream& out, const Mesh2D& mesh);
Mesh2D read_mesh(std::istream& in);

void write_optical_mode(std::ostream& out, const OpticalMode& mode);
OpticalMode read_optical_mode(std::istream& in);

void write_acoustic_mode(std::ostream& out, const AcousticMode& mode);
AcousticMode read_acoustic_mode(std::istream& in);

// File wrappers; failures to open or write throw IoError.
void save_mesh(const std::string& path, const Mesh2D& mesh);
void save_optical_mode(const std::string& path, const OpticalMode& mode);
void save_acoustic_mode(const std::string& path, const AcousticMode& mode);

}  // namespace slotbrillouin
