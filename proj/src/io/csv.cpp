#include "io/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace adlab::io {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

bool parse_row(const std::string& line, std::vector<double>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        std::size_t begin = pos, end = comma;
        while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
        while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t' || line[end - 1] == '\r'))
            --end;
        if (begin == end) return false;
        double value = 0.0;
        const auto res = std::from_chars(line.data() + begin, line.data() + end, value);
        if (res.ec != std::errc() || res.ptr != line.data() + end) return false;
        out.push_back(value);
        if (comma == line.size()) break;
        pos = comma + 1;
    }
    return !out.empty();
}

} // namespace

Matrix read_csv_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CSV file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    std::vector<double> parsed;
    while (std::getline(in, line)) {
        ++lineno;
        // Skip blank lines and an optional non-numeric header on line 1.
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
        if (trimmed.empty()) continue;
        if (!parse_row(line, parsed)) {
            if (lineno == 1 && rows.empty()) continue; // header
            throw IoError(path + ": malformed CSV at line " + std::to_string(lineno));
        }
        if (!rows.empty() && parsed.size() != rows.front().size())
            throw IoError(path + ": inconsistent column count at line " + std::to_string(lineno));
        rows.push_back(parsed);
    }
    if (rows.empty()) throw IoError(path + ": no numeric rows");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

std::string join_csv_row(const std::vector<std::string>& cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    return os.str();
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write CSV file: " + path);
    out << join_csv_row(header) << '\n';
    for (const auto& row : rows) out << join_csv_row(row) << '\n';
}

} // namespace adlab::io
