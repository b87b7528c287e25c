#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sworbit/abelian_group.hpp"
#include "sworbit/errors.hpp"
#include "sworbit/int_matrix.hpp"
#include "sworbit/orbit_space.hpp"
#include "sworbit/seiberg_witten.hpp"

namespace sworbit {

class syntax_error : public engine_error {
public:
    syntax_error(std::size_t line, std::size_t column, const std::string& message)
        : engine_error(errc::invalid_input, "line " + std::to_string(line) + ", col " +
                                                std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class semantic_error : public engine_error {
public:
    explicit semantic_error(std::vector<Violation> violations)
        : engine_error(errc::invalid_input, describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& violations) {
        std::string s = "presentation is not legally weighted";
        for (const auto& v : violations) s += "\n  " + v.to_string();
        return s;
    }

    std::vector<Violation> violations_;
};

namespace detail {

/// Cursor over one line; all positions are 1-based for diagnostics.
class LineCursor {
public:
    LineCursor(const std::string& text, std::size_t line_no) : text_(text), line_(line_no) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return pos_ + 1; }
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (at_end() || text_[pos_] != c)
            throw syntax_error(line_, column(),
                               std::string("expected '") + c + "'" +
                                   (at_end() ? " at end of line" : std::string(", found '") +
                                                                       text_[pos_] + "'"));
        ++pos_;
    }

    bool consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string word() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::int64_t integer() {
        skip_spaces();
        std::size_t start = pos_;
        if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits_from = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits_from)
            throw syntax_error(line_, start + 1, "expected an integer");
        try {
            return std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw syntax_error(line_, start + 1, "integer out of range");
        }
    }

    Int big_integer() {
        skip_spaces();
        std::size_t start = pos_;
        if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits_from = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits_from)
            throw syntax_error(line_, start + 1, "expected an integer");
        return Int(text_.substr(start, pos_ - start));
    }

    void expect_key(const std::string& key) {
        skip_spaces();
        if (text_.compare(pos_, key.size(), key) != 0)
            throw syntax_error(line_, column(), "expected '" + key + "'");
        pos_ += key.size();
    }

    void expect_line_end() {
        skip_spaces();
        if (!at_end())
            throw syntax_error(line_, column(), "unexpected trailing text '" +
                                                    text_.substr(pos_) + "'");
    }

private:
    const std::string& text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline std::vector<Weight> parse_weight_list(LineCursor& cur) {
    std::vector<Weight> out;
    cur.skip_spaces();
    while (cur.peek() == '(') {
        cur.expect('(');
        std::int64_t alpha = cur.integer();
        cur.skip_spaces();
        cur.expect(',');
        std::int64_t beta = cur.integer();
        cur.skip_spaces();
        cur.expect(')');
        out.push_back({alpha, beta});
        cur.skip_spaces();
    }
    if (out.empty())
        throw syntax_error(cur.line(), cur.column(), "expected at least one weight pair '(a,b)'");
    return out;
}

inline std::vector<Int> parse_bracket_list(LineCursor& cur) {
    std::vector<Int> out;
    cur.skip_spaces();
    cur.expect('[');
    cur.skip_spaces();
    while (cur.peek() != ']') {
        out.push_back(cur.big_integer());
        cur.skip_spaces();
    }
    cur.expect(']');
    return out;
}

}  // namespace detail

/// Builds a group element from a flat coordinate row: free coordinates
/// first, then one coordinate per invariant factor.
inline GroupElement element_from_coords(const FgAbelianGroup& group, const std::vector<Int>& coords) {
    std::size_t need = group.free_rank() + group.invariant_factors().size();
    if (coords.size() != need)
        raise(errc::dimension_mismatch, "expected " + std::to_string(need) +
                                            " coordinates, got " + std::to_string(coords.size()));
    std::vector<Int> free(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(group.free_rank()));
    std::vector<Int> torsion(coords.begin() + static_cast<std::ptrdiff_t>(group.free_rank()),
                             coords.end());
    return group.element(std::move(free), std::move(torsion));
}

/// Parses the line-oriented presentation format.  Blank lines and lines
/// starting with '#' are ignored.  The first statement must be
/// `presentation <name>`.  Throws syntax_error on malformed input and
/// semantic_error when the parsed presentation fails validate().
inline WeightedOrbitSpace parse_presentation(const std::string& text) {
    WeightedOrbitSpace y;
    bool seen_presentation = false;
    bool seen_b1 = false;
    std::optional<std::size_t> pic_generators;
    std::optional<IntMatrix> pic_relations;
    std::optional<std::vector<Int>> euler_coords;
    std::size_t euler_line = 0;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        detail::LineCursor cur(raw, line_no);
        cur.skip_spaces();
        if (cur.at_end() || cur.peek() == '#') continue;

        std::string head = cur.word();
        if (!seen_presentation && head != "presentation")
            throw syntax_error(line_no, 1, "file must start with 'presentation <name>'");

        if (head == "presentation") {
            if (seen_presentation)
                throw syntax_error(line_no, 1, "duplicate 'presentation' line");
            std::string name = cur.word();
            if (name.empty()) throw syntax_error(line_no, cur.column(), "expected a name");
            y.name = name;
            seen_presentation = true;
        } else if (head == "b1") {
            if (seen_b1) throw syntax_error(line_no, 1, "duplicate 'b1' line");
            y.b1 = cur.integer();
            seen_b1 = true;
        } else if (head == "arc") {
            WeightedArc arc;
            cur.expect_key("index=");
            arc.index = cur.integer();
            cur.expect_key("weights=");
            arc.segments = detail::parse_weight_list(cur);
            y.arcs.push_back(std::move(arc));
        } else if (head == "circle") {
            WeightedCircle circle;
            cur.expect_key("index=");
            circle.index = cur.integer();
            cur.expect_key("fixed_points=");
            circle.fixed_point_count = cur.integer();
            cur.expect_key("weights=");
            circle.segments = detail::parse_weight_list(cur);
            y.circles.push_back(std::move(circle));
        } else if (head == "isolated") {
            cur.expect_key("index=");
            y.isolated.push_back({cur.integer()});
        } else if (head == "boundary") {
            BoundarySurface b;
            cur.expect_key("genus=");
            b.genus = cur.integer();
            cur.expect_key("index=");
            b.index = cur.integer();
            y.boundaries.push_back(b);
        } else if (head == "pic_t") {
            if (pic_generators)
                throw syntax_error(line_no, 1, "duplicate 'pic_t' line");
            cur.expect_key("generators=");
            std::int64_t gens = cur.integer();
            if (gens < 0) throw syntax_error(line_no, cur.column(), "generator count must be >= 0");
            cur.expect_key("relations=");
            cur.skip_spaces();
            cur.expect('[');
            std::vector<std::vector<Int>> rows;
            std::vector<Int> row;
            cur.skip_spaces();
            while (cur.peek() != ']') {
                if (cur.consume(';')) {
                    rows.push_back(std::move(row));
                    row.clear();
                } else {
                    row.push_back(cur.big_integer());
                }
                cur.skip_spaces();
            }
            cur.expect(']');
            if (!row.empty()) rows.push_back(std::move(row));
            for (const auto& r : rows)
                if (r.size() != static_cast<std::size_t>(gens))
                    throw syntax_error(line_no, 1, "each relation row needs one entry per generator");
            pic_generators = static_cast<std::size_t>(gens);
            if (rows.empty())
                pic_relations = IntMatrix(0, static_cast<std::size_t>(gens));
            else
                pic_relations = IntMatrix::from_rows(rows);
        } else if (head == "euler_class") {
            if (euler_coords)
                throw syntax_error(line_no, 1, "duplicate 'euler_class' line");
            euler_coords = detail::parse_bracket_list(cur);
            euler_line = line_no;
        } else {
            throw syntax_error(line_no, 1, "unknown statement '" + head + "'");
        }
        cur.expect_line_end();
    }

    if (!seen_presentation) throw syntax_error(1, 1, "empty input: expected 'presentation <name>'");

    if (pic_generators) {
        y.pic_group = group_from_relations(*pic_generators, *pic_relations);
        if (euler_coords) {
            try {
                y.euler_class = element_from_coords(*y.pic_group, *euler_coords);
            } catch (const engine_error& e) {
                throw syntax_error(euler_line, 1, e.what());
            }
        }
    } else if (euler_coords) {
        throw syntax_error(euler_line, 1, "euler_class requires a pic_t declaration");
    }

    std::vector<Violation> violations = validate(y);
    if (!violations.empty()) throw semantic_error(std::move(violations));
    return y;
}

inline WeightedOrbitSpace parse_presentation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::invalid_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

namespace detail {
inline std::string weights_field(const std::vector<Weight>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) s += " ";
        s += "(" + std::to_string(ws[i].alpha) + "," + std::to_string(ws[i].beta) + ")";
    }
    return s;
}
}  // namespace detail

/// Deterministic rendering in the fixed section order.  Serializing a
/// canonicalized presentation and parsing it back is the identity, byte for
/// byte.
inline std::string serialize_presentation(const WeightedOrbitSpace& y) {
    std::ostringstream out;
    out << "presentation " << (y.name.empty() ? "unnamed" : y.name) << "\n";
    out << "b1 " << y.b1 << "\n";
    for (const auto& a : y.arcs)
        out << "arc index=" << a.index << " weights=" << detail::weights_field(a.segments) << "\n";
    for (const auto& c : y.circles)
        out << "circle index=" << c.index << " fixed_points=" << c.fixed_point_count
            << " weights=" << detail::weights_field(c.segments) << "\n";
    for (const auto& p : y.isolated) out << "isolated index=" << p.index << "\n";
    for (const auto& b : y.boundaries)
        out << "boundary genus=" << b.genus << " index=" << b.index << "\n";
    if (y.pic_group) {
        // Reconstruct a relation presentation of the stored canonical form:
        // one diagonal relation per invariant factor.
        std::size_t gens = y.pic_group->free_rank() + y.pic_group->invariant_factors().size();
        out << "pic_t generators=" << gens << " relations=[";
        const auto& factors = y.pic_group->invariant_factors();
        for (std::size_t r = 0; r < factors.size(); ++r) {
            if (r) out << "; ";
            for (std::size_t c = 0; c < gens; ++c) {
                if (c) out << " ";
                out << (c == y.pic_group->free_rank() + r ? factors[r] : Int(0));
            }
        }
        out << "]\n";
        if (y.euler_class) {
            out << "euler_class [";
            bool first = true;
            auto emit = [&](const Int& v) {
                if (!first) out << " ";
                first = false;
                out << v;
            };
            for (const Int& v : y.euler_class->free_coords()) emit(v);
            for (const Int& v : y.euler_class->torsion_coords()) emit(v);
            out << "]\n";
        }
    }
    return out.str();
}

/// Parses the table format: one `coords : value` association per line, with
/// blank lines and '#' comments ignored.  Coordinates are flat rows over
/// `group` (free coordinates first).  Duplicate keys are rejected.
inline Sw3Table parse_sw3_table(const std::string& text, const FgAbelianGroup& group) {
    Sw3Table table(group);
    std::vector<GroupElement> seen;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        detail::LineCursor cur(raw, line_no);
        cur.skip_spaces();
        if (cur.at_end() || cur.peek() == '#') continue;

        std::vector<Int> coords;
        cur.skip_spaces();
        while (cur.peek() != ':') {
            if (cur.at_end())
                throw syntax_error(line_no, cur.column(), "expected ':' separating coords and value");
            coords.push_back(cur.big_integer());
            cur.skip_spaces();
        }
        cur.expect(':');
        Int value = cur.big_integer();
        cur.expect_line_end();

        GroupElement key = [&] {
            try {
                return element_from_coords(group, coords);
            } catch (const engine_error& e) {
                throw syntax_error(line_no, 1, e.what());
            }
        }();
        for (const GroupElement& k : seen)
            if (k == key) throw syntax_error(line_no, 1, "duplicate table key");
        seen.push_back(key);
        table.set(key, value);
    }
    return table;
}

inline Sw3Table parse_sw3_table_file(const std::string& path, const FgAbelianGroup& group) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::invalid_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sw3_table(buf.str(), group);
}

}  // namespace sworbit
