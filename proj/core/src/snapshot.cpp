#include "levelset/snapshot.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace levelset {

namespace {

void write_le(std::ostream& os, std::span<const double> values) {
    if constexpr (std::endian::native == std::endian::little) {
        os.write(reinterpret_cast<const char*>(values.data()),
                 static_cast<std::streamsize>(values.size() * sizeof(double)));
    } else {
        for (double v : values) {
            char bytes[sizeof(double)];
            std::memcpy(bytes, &v, sizeof(double));
            for (int b = static_cast<int>(sizeof(double)) - 1; b >= 0; --b)
                os.put(bytes[b]);
        }
    }
}

void read_le(std::istream& is, std::span<double> values) {
    if constexpr (std::endian::native == std::endian::little) {
        is.read(reinterpret_cast<char*>(values.data()),
                static_cast<std::streamsize>(values.size() * sizeof(double)));
    } else {
        for (double& v : values) {
            char bytes[sizeof(double)];
            is.read(bytes, sizeof(double));
            char swapped[sizeof(double)];
            for (std::size_t b = 0; b < sizeof(double); ++b)
                swapped[b] = bytes[sizeof(double) - 1 - b];
            std::memcpy(&v, swapped, sizeof(double));
        }
    }
}

std::string header_line(std::istream& is, const std::string& key) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("snapshot: truncated header, expected '" + key + "'");
    if (line.rfind(key + " ", 0) != 0 && line != key)
        throw std::runtime_error("snapshot: expected header line '" + key + "', got '" + line + "'");
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
}

std::vector<double> parse_reals(const std::string& text, std::size_t expected, const char* what) {
    std::istringstream ss(text);
    std::vector<double> values;
    double v;
    while (ss >> v)
        values.push_back(v);
    if (values.size() != expected)
        throw std::runtime_error(std::string("snapshot: header line '") + what + "' has wrong arity");
    return values;
}

} // namespace

void write_snapshot(const std::filesystem::path& path, const ScalarField& field, double time) {
    const Grid& g = field.grid();
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("snapshot: cannot open " + path.string() + " for writing");

    std::ostringstream header;
    header << std::setprecision(17);
    header << "dims " << g.dim() << "\n";
    header << "counts";
    for (int d = 0; d < g.dim(); ++d)
        header << " " << g.count(d);
    header << "\nmins";
    for (int d = 0; d < g.dim(); ++d)
        header << " " << g.min(d);
    header << "\nmaxs";
    for (int d = 0; d < g.dim(); ++d)
        header << " " << g.max(d);
    header << "\ntime " << time << "\n";

    os << header.str();
    write_le(os, field.values());
    if (!os)
        throw std::runtime_error("snapshot: write to " + path.string() + " failed");
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("snapshot: cannot open " + path.string());

    const int dims = std::stoi(header_line(is, "dims"));
    if (dims < 1 || dims > 16)
        throw std::runtime_error("snapshot: implausible dimension count");

    const std::string counts_text = header_line(is, "counts");
    std::istringstream cs(counts_text);
    std::vector<int> counts;
    int c;
    while (cs >> c)
        counts.push_back(c);
    if (counts.size() != static_cast<std::size_t>(dims))
        throw std::runtime_error("snapshot: header line 'counts' has wrong arity");

    const std::vector<double> mins = parse_reals(header_line(is, "mins"),
                                                 static_cast<std::size_t>(dims), "mins");
    const std::vector<double> maxs = parse_reals(header_line(is, "maxs"),
                                                 static_cast<std::size_t>(dims), "maxs");
    const double time = parse_reals(header_line(is, "time"), 1, "time")[0];

    GridPtr grid = Grid::create(mins, maxs, counts);
    std::vector<double> data(grid->node_count());
    read_le(is, data);
    if (!is)
        throw std::runtime_error("snapshot: payload truncated in " + path.string());
    for (double v : data)
        if (!std::isfinite(v))
            throw std::runtime_error("snapshot: payload contains non-finite values");

    return Snapshot{grid, ScalarField(grid, std::move(data)), time};
}

} // namespace levelset
