#include "inthull/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace inthull {

namespace {

struct Line
{
    std::size_t number;
    std::vector<std::string> tokens;
};

// Next non-blank, non-comment line.
bool next_line(std::istream& in, std::size_t& counter, Line& out)
{
    std::string text;
    while (std::getline(in, text)) {
        ++counter;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#')
            continue;
        std::istringstream ss(text);
        out.number = counter;
        out.tokens.clear();
        for (std::string tok; ss >> tok;)
            out.tokens.push_back(tok);
        return true;
    }
    return false;
}

bool is_integer_token(const std::string& t)
{
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() &&
           std::all_of(t.begin() + static_cast<long>(i), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInteger parse_integer(const std::string& t, std::size_t line)
{
    if (!is_integer_token(t)) {
        if (t.find_first_of("/.eE") != std::string::npos)
            throw TypeError("non-integer coefficient '" + t + "'", line);
        throw ParseError("not a number: '" + t + "'", line);
    }
    return BigInteger(t[0] == '+' ? t.substr(1) : t, 10);
}

BigRational parse_rational(const std::string& t, std::size_t line)
{
    const auto slash = t.find('/');
    if (slash == std::string::npos)
        return BigRational(parse_integer(t, line));
    const std::string num = t.substr(0, slash);
    const std::string den = t.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + t + "'", line);
    const BigInteger q = parse_integer(den, line);
    if (q == 0)
        throw ParseError("zero denominator in '" + t + "'", line);
    return make_rational(parse_integer(num, line), q);
}

std::pair<std::size_t, std::size_t> parse_header(std::istream& in, std::size_t& counter)
{
    Line line;
    if (!next_line(in, counter, line))
        throw ParseError("missing header line", counter + 1);
    if (line.tokens.size() != 2 || !is_integer_token(line.tokens[0]) ||
        !is_integer_token(line.tokens[1]) || line.tokens[0][0] == '-' || line.tokens[1][0] == '-')
        throw ParseError("header must be two non-negative integers", line.number);
    return {std::stoul(line.tokens[0]), std::stoul(line.tokens[1])};
}

void expect_end(std::istream& in, std::size_t& counter)
{
    Line line;
    if (next_line(in, counter, line))
        throw ParseError("unexpected data after the last row", line.number);
}

}  // namespace

HPolyhedron parse_hrep(std::istream& in)
{
    std::size_t counter = 0;
    auto [m, d] = parse_header(in, counter);
    std::vector<Line> lines;
    for (Line line; next_line(in, counter, line);)
        lines.push_back(line);

    auto fits = [&](std::size_t rows, std::size_t dim) {
        return lines.size() == rows &&
               std::all_of(lines.begin(), lines.end(), [&](const Line& l) { return l.tokens.size() == dim + 1; });
    };
    // A header written "d m" is accepted when only that reading matches the rows.
    if (!fits(m, d) && fits(d, m))
        std::swap(m, d);

    HPolyhedron h(d);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == lines.size())
            throw ParseError("expected " + std::to_string(m) + " rows, got " + std::to_string(i),
                             counter);
        const Line& line = lines[i];
        if (line.tokens.size() != d + 1)
            throw ParseError("expected " + std::to_string(d + 1) + " integers, got " +
                                 std::to_string(line.tokens.size()),
                             line.number);
        IntVector a(d);
        for (std::size_t j = 0; j < d; ++j)
            a[j] = parse_integer(line.tokens[j], line.number);
        h.add(a, parse_integer(line.tokens[d], line.number));
    }
    if (lines.size() > m)
        throw ParseError("unexpected data after the last row", lines[m].number);
    return h;
}

HPolyhedron read_hrep(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0);
    try {
        return parse_hrep(in);
    } catch (const TypeError& e) {
        throw TypeError(path.string() + ": " + e.what(), 0);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

VRepresentation parse_vrep(std::istream& in)
{
    std::size_t counter = 0;
    const auto [n, d] = parse_header(in, counter);
    VRepresentation v{d, {}};
    Line line;
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line(in, counter, line))
            throw ParseError("expected " + std::to_string(n) + " points, got " + std::to_string(i),
                             counter);
        if (line.tokens.size() != d)
            throw ParseError("expected " + std::to_string(d) + " coordinates, got " +
                                 std::to_string(line.tokens.size()),
                             line.number);
        RatVector p;
        for (const auto& t : line.tokens)
            p.push_back(parse_rational(t, line.number));
        v.points.push_back(std::move(p));
    }
    expect_end(in, counter);
    return v;
}

void write_hrep(std::ostream& out, std::size_t dim, const std::vector<Inequality>& rows)
{
    out << rows.size() << ' ' << dim << '\n';
    for (const auto& r : rows) {
        for (const auto& x : r.a)
            out << x << ' ';
        out << r.beta << '\n';
    }
}

void write_hrep(std::ostream& out, const HPolyhedron& h)
{
    if (!h.trivially_infeasible()) {
        write_hrep(out, h.dim(), h.rows());
        return;
    }
    // Keep the infeasibility marker as an explicit 0 <= -1 row.
    std::vector<Inequality> rows = h.rows();
    rows.push_back(Inequality{IntVector(h.dim()), -1});
    write_hrep(out, h.dim(), rows);
}

void write_vrep(std::ostream& out, std::size_t dim, const std::vector<RatVector>& points)
{
    out << points.size() << ' ' << dim << '\n';
    for (const auto& p : points) {
        for (std::size_t j = 0; j < p.size(); ++j)
            out << (j ? " " : "") << to_string(p[j]);
        out << '\n';
    }
}

void write_vrep(std::ostream& out, std::size_t dim, const std::vector<IntVector>& points)
{
    out << points.size() << ' ' << dim << '\n';
    for (const auto& p : points) {
        for (std::size_t j = 0; j < p.size(); ++j)
            out << (j ? " " : "") << p[j];
        out << '\n';
    }
}

}  // namespace inthull
