#ifndef EVACWATCH_CORE_CSV_HPP
#define EVACWATCH_CORE_CSV_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evacwatch::csv {

// Splits one line into fields. Double-quoted fields may contain the
// delimiter and doubled quotes; unquoted fields are returned as views into
// `line`, unescaped ones as views into `scratch`. Returns false on an
// unterminated quote.
bool split(std::string_view line, char delim, std::vector<std::string_view>& out,
           std::string& scratch);

// Reads logical lines, tolerating \r\n endings. Does not merge quoted
// newlines; none of the formats here embed them.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  bool next(std::string& line);
  std::uint64_t line_number() const { return line_no_; }

 private:
  std::istream& in_;
  std::uint64_t line_no_ = 0;
};

std::string quote_if_needed(std::string_view field, char delim = ',');

// Shortest round-trip representation; deterministic across runs.
std::string format_double(double v);
// Fixed decimal places, for compact plot data.
std::string format_fixed(double v, int places);

std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int64(std::string_view s);

}  // namespace evacwatch::csv

#endif
