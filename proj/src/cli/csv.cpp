#include "gibbs/cli/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gibbs::cli {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_field(const std::string& field) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed CSV field '" + field + "'");
  }
  return value;
}

}  // namespace

void write_sample_csv(std::ostream& out, const SampleTable& table) {
  for (int k = 0; k < table.dim; ++k) out << 'x' << k + 1 << ',';
  out << "mark\n";
  char buffer[64];
  for (const auto& p : table.points) {
    for (int k = 0; k < table.dim; ++k) {
      const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, p.x[k]);
      out.write(buffer, ptr - buffer);
      out << ',';
    }
    out << static_cast<int>(p.mark) << '\n';
  }
}

SampleTable read_sample_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty sample CSV");
  const auto header = split(line);
  const int dim = static_cast<int>(header.size()) - 1;
  if (dim < 1 || dim > kMaxDim || header.back() != "mark") {
    throw std::invalid_argument("sample CSV header must be x1,...,xd,mark");
  }
  for (int k = 0; k < dim; ++k) {
    if (header[k] != "x" + std::to_string(k + 1)) {
      throw std::invalid_argument("sample CSV header must be x1,...,xd,mark");
    }
  }
  SampleTable table;
  table.dim = dim;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (static_cast<int>(fields.size()) != dim + 1) {
      throw std::invalid_argument("sample CSV row has wrong arity: " + line);
    }
    MarkedPoint p{};
    for (int k = 0; k < dim; ++k) p.x[k] = parse_field<double>(fields[k]);
    const int mark = parse_field<int>(fields[dim]);
    if (mark < 0 || mark > 2) throw std::invalid_argument("mark must be 0, 1 or 2");
    p.mark = static_cast<Mark>(mark);
    table.points.push_back(p);
  }
  return table;
}

}  // namespace gibbs::cli
