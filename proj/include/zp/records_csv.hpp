#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "zp/argtrack.hpp"

namespace zp {

// One persisted CSV row: the PhaseRecord plus the two raw (un-normalized)
// centerings, and the dx-check agreement column when that mode ran.
struct RecordRow {
  PhaseRecord rec;
  double arg_paper_raw;       // continuous_arg + pi - gamma log 2
  double arg_convention_raw;  // continuous_arg - pi + gamma log 2
  int winding_agrees = -1;    // -1 = column absent, else 0/1
};

RecordRow make_record_row(const PhaseRecord& rec);

// Header: k,gamma,re_zp,im_zp,winding,continuous_arg,arg_paper_raw,
// arg_convention_raw,flags[,winding_agrees].  Floats print with 17
// significant digits so a read-back reproduces every bit.
void write_records_csv(std::ostream& out, std::span<const RecordRow> rows,
                       bool with_agrees);

std::vector<RecordRow> read_records_csv(std::istream& in);

}  // namespace zp
