#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fbvp {

/// Fixed-point decimal with the given number of decimals.
std::string format_fixed(double v, int decimals);

/// Scientific with three significant digits, e.g. "6.19e-05".
std::string format_sci(double v);

/// Shortest representation that round-trips the double exactly.
std::string format_full(double v);

/// Rectangular table of preformatted cells, rendered as aligned text or CSV.
/// CSV output is comma separated with a header row, '.' decimal point and
/// newline-terminated lines regardless of locale.
class output_table {
public:
    explicit output_table(std::vector<std::string> header);

    /// Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::vector<std::string> cells);

    std::string to_text() const;
    std::string to_csv() const;

    const std::vector<std::string>& header() const noexcept { return header_; }
    std::size_t rows() const noexcept { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace fbvp
