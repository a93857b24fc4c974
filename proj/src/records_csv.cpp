#include "zp/records_csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tables.hpp"

namespace zp {

namespace {

const char* kHeader =
    "k,gamma,re_zp,im_zp,winding,continuous_arg,arg_paper_raw,"
    "arg_convention_raw,flags";

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& field, long long lineno) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0')
    throw ParseError(lineno, "bad float: " + field);
  return v;
}

long long parse_int(const std::string& field, long long lineno) {
  char* end = nullptr;
  const long long v = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0')
    throw ParseError(lineno, "bad integer: " + field);
  return v;
}

}  // namespace

RecordRow make_record_row(const PhaseRecord& rec) {
  RecordRow row;
  row.rec = rec;
  row.arg_paper_raw =
      rec.continuous_arg + detail::kPi - rec.gamma * detail::kLn2;
  row.arg_convention_raw =
      rec.continuous_arg - detail::kPi + rec.gamma * detail::kLn2;
  return row;
}

void write_records_csv(std::ostream& out, std::span<const RecordRow> rows,
                       bool with_agrees) {
  out << kHeader;
  if (with_agrees) out << ",winding_agrees";
  out << "\n";
  for (const auto& row : rows) {
    const auto& r = row.rec;
    out << r.k << ',' << fmt17(r.gamma) << ',' << fmt17(r.zeta_prime.real())
        << ',' << fmt17(r.zeta_prime.imag()) << ',' << r.winding << ','
        << fmt17(r.continuous_arg) << ',' << fmt17(row.arg_paper_raw) << ','
        << fmt17(row.arg_convention_raw) << ',' << flags_to_string(r.flags);
    if (with_agrees) out << ',' << row.winding_agrees;
    out << "\n";
  }
  if (!out) throw IoError("write_records_csv: stream write failed");
}

std::vector<RecordRow> read_records_csv(std::istream& in) {
  std::string line;
  long long lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool with_agrees = false;
  if (line == std::string(kHeader) + ",winding_agrees")
    with_agrees = true;
  else if (line != kHeader)
    throw ParseError(1, "unexpected header: " + line);

  std::vector<RecordRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    const std::size_t expected = with_agrees ? 10 : 9;
    if (fields.size() != expected)
      throw ParseError(lineno, "expected " + std::to_string(expected) +
                                   " fields, got " +
                                   std::to_string(fields.size()));

    RecordRow row;
    row.rec.k = parse_int(fields[0], lineno);
    row.rec.gamma = parse_double(fields[1], lineno);
    row.rec.zeta_prime = Complex(parse_double(fields[2], lineno),
                                 parse_double(fields[3], lineno));
    row.rec.winding = parse_int(fields[4], lineno);
    row.rec.continuous_arg = parse_double(fields[5], lineno);
    row.arg_paper_raw = parse_double(fields[6], lineno);
    row.arg_convention_raw = parse_double(fields[7], lineno);
    try {
      row.rec.flags = flags_from_string(fields[8]);
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
    row.rec.vertical_arg = 0.0;  // not persisted
    if (with_agrees)
      row.winding_agrees = int(parse_int(fields[9], lineno));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zp
