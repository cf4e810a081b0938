#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace oensim {

// Minimal RFC-4180 writer. Numbers are written with %.17g so files round-trip
// and regression-diff bit-exactly.
class CsvWriter {
public:
    void header(const std::vector<std::string>& names) { row_strings(names); }

    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << quote(cells[i]);
        }
        out_ << "\r\n";
    }

    static std::string num(double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }
    static std::string num(long long v) { return std::to_string(v); }
    static std::string num(unsigned long long v) { return std::to_string(v); }

    std::string str() const { return out_.str(); }

private:
    static std::string quote(const std::string& s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        q += "\"";
        return q;
    }

    std::ostringstream out_;
};

}  // namespace oensim
