#pragma once

#include <string>
#include <vector>

#include "vsg/automaton.hpp"
#include "vsg/core.hpp"
#include "vsg/grid.hpp"
#include "vsg/oracle.hpp"
#include "vsg/periodicity.hpp"
#include "vsg/segmentation.hpp"

namespace vsg {

// PBM P1, origin bottom-left: file row 0 is y = H-1; bit 1 = P (black).
std::string render_pbm(const outcome_grid& grid);
outcome_grid parse_pbm(const std::string& bytes);

// PPM P6 (binary). P cells black, N cells white; colored cells take a fixed
// palette keyed by color id.
std::string render_ppm(const outcome_grid& grid);
std::string render_ppm(const outcome_grid& grid, const colored_grid& colors);

// Raw little-endian bit dump: 16-byte header (8-byte magic "VSGRID\0\0",
// u32 W, u32 H), then the packed words.
std::string render_raw(const outcome_grid& grid);
outcome_grid parse_raw(const std::string& bytes);

// CSV emission.
std::string render_csv(const outcome_grid& grid);                    // x,y,outcome
std::string render_csv(const std::vector<period_report>& reports);   // period table

// JSON reports, all carrying "schema": 1.
std::string json_report(const std::vector<verification_report>& reports);
std::string json_report(const std::vector<period_report>& reports);
std::string json_report(const segmentation_report& report);
std::string json_report(const percolation_result& result);

} // namespace vsg
