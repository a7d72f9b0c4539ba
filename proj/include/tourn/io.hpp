#pragma once

// Text formats (1-based where vertex ids appear).
//
//   digraph   line 1: n; then n lines of n characters over {0,1}; entry (i,j) = 1
//             iff arc i -> j; the diagonal is 0
//   matrix    line 1: "R C"; then R lines of C characters over {0,1}
//   ordering  one line of n space-separated vertex ids
//   graph     line 1: "n m"; then m lines "u v"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace tourn {

class ParseError : public DomainError {
public:
    ParseError(const std::string& what, int line, int column)
        : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

class LineReader {
public:
    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string l;
        while (std::getline(in, l)) {
            while (!l.empty() && (l.back() == '\r' || l.back() == ' ' || l.back() == '\t')) l.pop_back();
            lines_.push_back(l);
        }
    }

    /// Next line (1-based number in `number`); fails at end of input.
    const std::string& next(int& number, const char* expecting) {
        if (pos_ >= lines_.size())
            throw ParseError(std::string("unexpected end of input, expected ") + expecting, static_cast<int>(lines_.size()) + 1, 1);
        number = static_cast<int>(++pos_);
        return lines_[pos_ - 1];
    }

    /// Only blank lines may follow.
    void finish() const {
        for (std::size_t i = pos_; i < lines_.size(); ++i)
            if (!lines_[i].empty()) throw ParseError("unexpected trailing content", static_cast<int>(i) + 1, 1);
    }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

/// Whitespace-separated nonnegative integers of one line.
inline std::vector<long long> parse_ints(const std::string& s, int line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(std::string("expected a digit, found '") + s[i] + "'", line, static_cast<int>(i) + 1);
        long long v = 0;
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000LL) throw ParseError("number too large", line, static_cast<int>(start) + 1);
            ++i;
        }
        out.push_back(v);
    }
    return out;
}

inline std::vector<long long> expect_ints(LineReader& r, std::size_t count, const char* what) {
    int line = 0;
    const std::string& s = r.next(line, what);
    auto v = parse_ints(s, line);
    if (v.size() != count)
        throw ParseError(std::string("expected ") + what, line, 1);
    return v;
}

inline std::string bit_row(LineReader& r, int width, int& line, const char* what) {
    const std::string& s = r.next(line, what);
    for (int c = 0; c < static_cast<int>(s.size()) && c < width; ++c)
        if (s[c] != '0' && s[c] != '1')
            throw ParseError(std::string("expected 0 or 1, found '") + s[c] + "'", line, c + 1);
    if (static_cast<int>(s.size()) != width)
        throw ParseError("expected " + std::to_string(width) + " characters, found " + std::to_string(s.size()), line,
                         static_cast<int>(std::min<std::size_t>(s.size(), static_cast<std::size_t>(width))) + 1);
    return s;
}

/// Arc matrix with per-entry positions; line of row i is 2 + i.
inline ArcMatrix parse_arc_rows(LineReader& r, int& n_out) {
    auto head = expect_ints(r, 1, "vertex count n");
    const int n = static_cast<int>(head[0]);
    if (n > 100000) throw ParseError("vertex count too large", 1, 1);
    ArcMatrix m(n);
    for (int i = 0; i < n; ++i) {
        int line = 0;
        std::string row = bit_row(r, n, line, "an adjacency row");
        for (int j = 0; j < n; ++j) {
            if (row[j] != '1') continue;
            if (i == j) throw ParseError("diagonal entry must be 0", line, j + 1);
            m.set(i, j);
        }
    }
    r.finish();
    n_out = n;
    return m;
}

}  // namespace detail

/// Semi-complete digraph: every off-diagonal pair needs at least one arc.
inline SemiCompleteDigraph parse_semicomplete(const std::string& text) {
    detail::LineReader r(text);
    int n = 0;
    ArcMatrix m = detail::parse_arc_rows(r, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!m.arc(i, j) && !m.arc(j, i))
                throw ParseError("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} carries no arc", i + 2,
                                 j + 1);
    return SemiCompleteDigraph(std::move(m));
}

/// Tournament: every off-diagonal pair needs exactly one arc.
inline Tournament parse_tournament(const std::string& text) {
    detail::LineReader r(text);
    int n = 0;
    ArcMatrix m = detail::parse_arc_rows(r, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.arc(i, j) == m.arc(j, i))
                throw ParseError("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} must carry exactly one arc",
                                 i + 2, j + 1);
    return Tournament(std::move(m));
}

inline BinaryMatrix parse_matrix(const std::string& text) {
    detail::LineReader r(text);
    auto head = detail::expect_ints(r, 2, "dimensions \"R C\"");
    const int rows = static_cast<int>(head[0]), cols = static_cast<int>(head[1]);
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        int line = 0;
        std::string row = detail::bit_row(r, cols, line, "a matrix row");
        for (int j = 0; j < cols; ++j) m.set(i, j, row[j] == '1');
    }
    r.finish();
    return m;
}

inline VertexOrdering parse_ordering(const std::string& text) {
    detail::LineReader r(text);
    int line = 0;
    const std::string& s = r.next(line, "an ordering");
    auto ids = detail::parse_ints(s, line);
    r.finish();
    std::vector<int> perm;
    std::vector<char> seen(ids.size(), 0);
    for (std::size_t t = 0; t < ids.size(); ++t) {
        if (ids[t] < 1 || ids[t] > static_cast<long long>(ids.size()))
            throw ParseError("vertex id " + std::to_string(ids[t]) + " out of range", line, 1);
        if (seen[ids[t] - 1]) throw ParseError("vertex id " + std::to_string(ids[t]) + " repeated", line, 1);
        seen[ids[t] - 1] = 1;
        perm.push_back(static_cast<int>(ids[t] - 1));
    }
    return VertexOrdering(std::move(perm));
}

inline UndirectedOrderedGraph parse_graph(const std::string& text) {
    detail::LineReader r(text);
    auto head = detail::expect_ints(r, 2, "\"n m\"");
    const int n = static_cast<int>(head[0]);
    const long long m = head[1];
    std::vector<std::pair<int, int>> edges;
    for (long long e = 0; e < m; ++e) {
        int line = 0;
        const std::string& s = r.next(line, "an edge \"u v\"");
        auto uv = detail::parse_ints(s, line);
        if (uv.size() != 2) throw ParseError("expected an edge \"u v\"", line, 1);
        for (long long x : uv)
            if (x < 1 || x > n) throw ParseError("endpoint " + std::to_string(x) + " out of range", line, 1);
        if (uv[0] == uv[1]) throw ParseError("loop at " + std::to_string(uv[0]), line, 1);
        edges.emplace_back(static_cast<int>(uv[0] - 1), static_cast<int>(uv[1] - 1));
    }
    r.finish();
    return {n, std::move(edges)};
}

inline std::string to_text(const ArcMatrix& m) {
    std::string s = std::to_string(m.size()) + "\n";
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) s += m.arc(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}
inline std::string to_text(const Tournament& t) { return to_text(t.arcs()); }
inline std::string to_text(const SemiCompleteDigraph& g) { return to_text(g.arcs()); }

inline std::string to_text(const BinaryMatrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

inline std::string to_text(const VertexOrdering& o) {
    std::string s;
    for (int p = 0; p < o.size(); ++p) s += (p ? " " : "") + std::to_string(o.at(p) + 1);
    return s + "\n";
}

inline std::string to_text(const UndirectedOrderedGraph& g) {
    std::string s = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) s += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return s;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << text;
}

}  // namespace tourn
