#include "zetapair/zero_file.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zetapair::io {

namespace {

const char* source_name(zeros::Source s) {
    switch (s) {
        case zeros::Source::Computed: return "computed";
        case zeros::Source::File: return "file";
        case zeros::Source::Synthetic: return "synthetic";
    }
    return "unknown";
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

zeros::ZeroDataset parse_zero_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zero file: " + path.string());
    zeros::ZeroDataset ds;
    ds.source = zeros::Source::File;
    ds.on_line = true;

    std::string line;
    long line_no = 0;
    double prev = -1.0;
    bool have_range = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            // Restore header metadata so a parse/format round trip is
            // byte-identical.
            if (body.rfind("# source: ", 0) == 0) {
                const std::string name = trim(body.substr(10));
                if (name == "computed") ds.source = zeros::Source::Computed;
                else if (name == "synthetic") ds.source = zeros::Source::Synthetic;
            } else if (body.rfind("# t-range: [", 0) == 0) {
                double lo = 0.0, hi = 0.0;
                char c = 0;
                std::istringstream range(body.substr(12));
                if (range >> lo >> c >> hi && c == ',') {
                    ds.t_min = lo;
                    ds.t_max = hi;
                    have_range = true;
                }
            }
            continue;
        }
        errno = 0;
        char* end = nullptr;
        const double gamma = std::strtod(body.c_str(), &end);
        if (end == body.c_str() || *end != '\0' || errno != 0)
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": malformed ordinate '" + body + "'");
        if (!(gamma > prev))
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": ordinates must be strictly increasing");
        prev = gamma;
        ds.zeros.push_back({0.5, gamma, 1});
    }
    if (ds.zeros.empty())
        throw std::runtime_error(path.string() + ": no ordinates found");
    if (!have_range) {
        ds.t_min = ds.zeros.front().gamma;
        ds.t_max = ds.zeros.back().gamma;
    }
    return ds;
}

std::string format_zero_file(const zeros::ZeroDataset& ds) {
    std::ostringstream out;
    out << "# zetapair zero cache\n";
    out << "# source: " << source_name(ds.source) << "\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    out << "# t-range: [" << ds.t_min << ", " << ds.t_max << "]\n";
    out.unsetf(std::ios::fixed);
    out << "# count: " << ds.zeros.size() << "\n";
    out.precision(12);
    for (const auto& z : ds.zeros) out << z.gamma << "\n";
    return out.str();
}

void write_zero_file(const std::filesystem::path& path,
                     const zeros::ZeroDataset& ds) {
    std::ofstream out(path, std::ios::binary);  // LF endings everywhere
    if (!out) throw std::runtime_error("cannot write zero file: " + path.string());
    out << format_zero_file(ds);
}

}  // namespace zetapair::io
