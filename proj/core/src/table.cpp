#include "fbvp/table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace fbvp {

namespace {

std::string to_chars_str(double v, std::chars_format fmt, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, fmt, precision);
    if (res.ec != std::errc{})
        throw std::invalid_argument("number does not fit the formatting buffer");
    return std::string(buf, res.ptr);
}

} // namespace

std::string format_fixed(double v, int decimals) {
    if (decimals < 0 || decimals > 40)
        throw std::invalid_argument("format_fixed: decimals out of range");
    return to_chars_str(v, std::chars_format::fixed, decimals);
}

std::string format_sci(double v) {
    return to_chars_str(v, std::chars_format::scientific, 2);
}

std::string format_full(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

output_table::output_table(std::vector<std::string> header)
    : header_(std::move(header)) {
    if (header_.empty())
        throw std::invalid_argument("output_table: header must not be empty");
}

void output_table::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("output_table: row width differs from header");
    rows_.push_back(std::move(cells));
}

std::string output_table::to_text() const {
    std::vector<std::size_t> widths(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c)
        widths[c] = header_[c].size();
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += "  ";
            out.append(widths[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& row : rows_)
        emit(row);
    return out;
}

std::string output_table::to_csv() const {
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += row[c];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& row : rows_)
        emit(row);
    return out;
}

} // namespace fbvp
