#ifndef ADLAB_IO_CSV_HPP
#define ADLAB_IO_CSV_HPP

#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace adlab::io {

// Shortest decimal string that round-trips the exact double, so repeated
// runs produce byte-identical files.
std::string format_double(double v);

// Numeric CSV. A non-numeric first line is treated as a header and
// skipped; any malformed later line raises IoError naming the line.
Matrix read_csv_matrix(const std::string& path);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::string join_csv_row(const std::vector<std::string>& cells);

} // namespace adlab::io

#endif
