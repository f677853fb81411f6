#include <charconv>

#include "maxtri/io.hpp"

namespace maxtri {

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t end = std::min(line.find(' ', pos), line.size());
        out.push_back(line.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc{} || ptr != last) throw parse_error(line, "bad integer '" + std::string(tok) + "'");
    return v;
}

}  // namespace

PolygonFile parse_polygon_file(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::optional<std::size_t> blank;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') continue;
        if (line.empty()) {
            if (!blank) blank = line_no;
            continue;
        }
        if (blank) throw parse_error(*blank, "blank line inside the polygon");
        rows.emplace_back(line_no, line);
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty polygon file");

    const auto header = split_spaces(rows[0].second);
    if (header.size() != 3 || header[0] != "n") {
        throw parse_error(rows[0].first, "expected header 'n <count> <CW|CCW>'");
    }
    const std::int64_t count = parse_int(header[1], rows[0].first);
    if (count < 0) throw parse_error(rows[0].first, "negative vertex count");

    PolygonFile file{ConvexPolygon::from_trusted({}), Orientation::CCW, {}, {}};
    if (header[2] == "CCW") {
        file.declared = Orientation::CCW;
    } else if (header[2] == "CW") {
        file.declared = Orientation::CW;
    } else {
        throw parse_error(rows[0].first, "orientation must be CW or CCW, got '" + std::string(header[2]) + "'");
    }
    if (static_cast<std::size_t>(count) != rows.size() - 1) {
        throw parse_error(rows[0].first, "header declares " + std::to_string(count) + " vertices, found " +
                                             std::to_string(rows.size() - 1));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto tok = split_spaces(rows[i].second);
        if (tok.size() != 2) throw parse_error(rows[i].first, "expected 'x y'");
        file.points.push_back({parse_int(tok[0], rows[i].first), parse_int(tok[1], rows[i].first)});
        file.lines.push_back(rows[i].first);
    }
    try {
        file.polygon = validate_convex_polygon(file.points, file.declared);
    } catch (const Error& e) {
        if (!e.vertex()) throw;
        throw Error(e.code(), "line " + std::to_string(file.lines[*e.vertex()]) + ": " + e.what(), e.vertex());
    }
    return file;
}

std::string format_polygon_file(std::span<const Point> points, Orientation orientation,
                                const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    out += "n " + std::to_string(points.size()) + (orientation == Orientation::CCW ? " CCW\n" : " CW\n");
    for (const Point& p : points) out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    return out;
}

std::size_t to_file_index(const PolygonFile& file, std::size_t i) {
    return file.declared == Orientation::CCW ? i : file.points.size() - 1 - i;
}

IndexTuple to_file_order(const PolygonFile& file, const IndexTuple& t) {
    std::vector<std::size_t> v;
    for (std::size_t i : t) v.push_back(to_file_index(file, i));
    return IndexTuple(std::move(v));
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace maxtri
