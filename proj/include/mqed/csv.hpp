// csv.hpp — deterministic CSV output with shortest round-trip float formatting

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mqed::csv {

// Shortest decimal string that parses back to the same double. Keeps output
// bytes identical across runs and lets tests compare values exactly.
inline std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) throw std::runtime_error("csv: float formatting failed");
    return std::string(buf, ptr);
}

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
    }

    void header(const std::vector<std::string>& names) { write_row_raw(names); }

    void row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (double v : values) cells.push_back(format_double(v));
        write_row_raw(cells);
    }

    void row_mixed(const std::vector<std::string>& cells) { write_row_raw(cells); }

private:
    void write_row_raw(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

}  // namespace mqed::csv
