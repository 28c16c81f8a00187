#include "rsiplan/qubo.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_format.hpp"

namespace rsiplan {

Qubo::Qubo(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("Qubo: negative variable count");
    linear_.assign(num_vars, 0.0);
    couplings_.assign(num_vars, {});
}

void Qubo::add_linear(int i, double coeff) {
    if (i < 0 || i >= num_vars_) throw std::invalid_argument("Qubo: linear index out of range");
    linear_[i] += coeff;
}

void Qubo::add_quadratic(int i, int j, double coeff) {
    if (i == j) throw std::invalid_argument("Qubo: quadratic term needs distinct variables");
    if (i < 0 || j < 0 || i >= num_vars_ || j >= num_vars_) {
        throw std::invalid_argument("Qubo: quadratic index out of range");
    }
    for (auto& [other, c] : couplings_[i]) {
        if (other == j) {
            c += coeff;
            for (auto& [back, cb] : couplings_[j]) {
                if (back == i) {
                    cb += coeff;
                    break;
                }
            }
            return;
        }
    }
    couplings_[i].emplace_back(j, coeff);
    couplings_[j].emplace_back(i, coeff);
    ++num_quadratic_;
}

double Qubo::linear(int i) const {
    if (i < 0 || i >= num_vars_) throw std::invalid_argument("Qubo: linear index out of range");
    return linear_[i];
}

const std::vector<std::pair<int, double>>& Qubo::couplings(int i) const {
    if (i < 0 || i >= num_vars_) throw std::invalid_argument("Qubo: variable index out of range");
    return couplings_[i];
}

std::vector<QuadraticTerm> Qubo::quadratic_terms() const {
    std::vector<QuadraticTerm> terms;
    terms.reserve(num_quadratic_);
    for (int i = 0; i < num_vars_; ++i) {
        for (const auto& [j, c] : couplings_[i]) {
            if (i < j) terms.push_back(QuadraticTerm{i, j, c});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const QuadraticTerm& a, const QuadraticTerm& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    return terms;
}

double Qubo::energy(const BitVector& x) const {
    if (static_cast<int>(x.size()) != num_vars_) {
        throw std::invalid_argument("Qubo::energy: vector length " + std::to_string(x.size()) +
                                    " != " + std::to_string(num_vars_));
    }
    double e = offset_;
    for (int i = 0; i < num_vars_; ++i) {
        if (!x[i]) continue;
        e += linear_[i];
        for (const auto& [j, c] : couplings_[i]) {
            if (j > i && x[j]) e += c;
        }
    }
    return e;
}

double Qubo::local_field(int i, const BitVector& x) const {
    if (static_cast<int>(x.size()) != num_vars_) {
        throw std::invalid_argument("Qubo::local_field: vector length mismatch");
    }
    double f = linear(i);
    for (const auto& [j, c] : couplings_[i]) {
        if (x[j]) f += c;
    }
    return f;
}

int Qubo::variable(int vertex, int color) const {
    if (!has_color_map()) throw std::logic_error("Qubo: no vertex/color map");
    if (vertex < 0 || vertex >= num_vertices_ || color < 0 || color >= num_colors_) {
        throw std::invalid_argument("Qubo::variable: vertex/color out of range");
    }
    return vertex * num_colors_ + color;
}

std::string Qubo::to_text() const {
    std::string out = std::to_string(num_vars_) + " " + detail::format_double(offset_) + "\n";
    for (int i = 0; i < num_vars_; ++i) {
        if (linear_[i] != 0.0) {
            out += std::to_string(i) + " " + std::to_string(i) + " " +
                   detail::format_double(linear_[i]) + "\n";
        }
    }
    for (const QuadraticTerm& t : quadratic_terms()) {
        out += std::to_string(t.i) + " " + std::to_string(t.j) + " " +
               detail::format_double(t.coeff) + "\n";
    }
    return out;
}

Qubo Qubo::from_text(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t row = 0;
    while (row < lines.size() && detail::is_blank(lines[row])) ++row;
    if (row == lines.size()) throw std::runtime_error("Qubo::from_text: empty input");

    const auto head = detail::split_fields(lines[row], ' ');
    std::int64_t m = 0;
    double offset = 0.0;
    if (head.size() != 2 || !detail::parse_i64(head[0], m) || !detail::parse_double(head[1], offset) || m < 0) {
        throw std::runtime_error("Qubo::from_text: bad header line");
    }
    Qubo q(static_cast<int>(m));
    q.set_offset(offset);

    std::vector<char> linear_seen(m, 0);
    for (++row; row < lines.size(); ++row) {
        if (detail::is_blank(lines[row])) continue;
        const auto f = detail::split_fields(lines[row], ' ');
        std::int64_t i = 0;
        std::int64_t j = 0;
        double coeff = 0.0;
        if (f.size() != 3 || !detail::parse_i64(f[0], i) || !detail::parse_i64(f[1], j) ||
            !detail::parse_double(f[2], coeff)) {
            throw std::runtime_error("Qubo::from_text: bad term on line " + std::to_string(row + 1));
        }
        if (i < 0 || j < 0 || i >= m || j >= m) {
            throw std::runtime_error("Qubo::from_text: index out of range on line " + std::to_string(row + 1));
        }
        if (i == j) {
            if (linear_seen[i]) {
                throw std::runtime_error("Qubo::from_text: duplicate linear term on line " + std::to_string(row + 1));
            }
            linear_seen[i] = 1;
            q.add_linear(static_cast<int>(i), coeff);
        } else {
            if (i > j) {
                throw std::runtime_error("Qubo::from_text: quadratic term needs i < j on line " + std::to_string(row + 1));
            }
            for (const auto& [other, c] : q.couplings(static_cast<int>(i))) {
                if (other == static_cast<int>(j)) {
                    throw std::runtime_error("Qubo::from_text: duplicate quadratic term on line " + std::to_string(row + 1));
                }
            }
            q.add_quadratic(static_cast<int>(i), static_cast<int>(j), coeff);
        }
    }
    return q;
}

Qubo build_qubo(const ConflictGraph& g, int num_colors, double penalty_a, double penalty_b) {
    if (num_colors < 1) throw std::invalid_argument("build_qubo: num_colors must be >= 1");
    if (penalty_a <= 0.0 || penalty_b <= 0.0) {
        throw std::invalid_argument("build_qubo: penalties must be positive");
    }
    const int n = g.num_vertices();
    Qubo q(n * num_colors);
    q.num_vertices_ = n;
    q.num_colors_ = num_colors;
    q.penalty_a_ = penalty_a;
    q.penalty_b_ = penalty_b;
    q.set_offset(penalty_a * n);

    for (int v = 0; v < n; ++v) {
        const int base = v * num_colors;
        for (int c = 0; c < num_colors; ++c) {
            q.add_linear(base + c, -penalty_a);
            for (int c2 = c + 1; c2 < num_colors; ++c2) {
                q.add_quadratic(base + c, base + c2, 2.0 * penalty_a);
            }
        }
    }
    for (const WeightedEdge& e : g.edges()) {
        for (int c = 0; c < num_colors; ++c) {
            q.add_quadratic(e.u * num_colors + c, e.v * num_colors + c, penalty_b);
        }
    }
    return q;
}

BitVector encode(const Coloring& c, const Qubo& q) {
    if (!q.has_color_map()) throw std::logic_error("encode: Qubo has no vertex/color map");
    if (c.num_vertices() != q.num_vertices()) {
        throw std::invalid_argument("encode: coloring size mismatch");
    }
    if (c.palette_size() != q.num_colors()) {
        throw std::invalid_argument("encode: palette_size " + std::to_string(c.palette_size()) +
                                    " != num_colors " + std::to_string(q.num_colors()));
    }
    if (!c.total()) throw std::invalid_argument("encode: coloring is partial");

    BitVector x(q.num_vars(), 0);
    for (int v = 0; v < c.num_vertices(); ++v) {
        x[q.variable(v, *c.color(v))] = 1;
    }
    return x;
}

Coloring decode(const BitVector& x, const Qubo& q) {
    if (!q.has_color_map()) throw std::logic_error("decode: Qubo has no vertex/color map");
    if (static_cast<int>(x.size()) != q.num_vars()) {
        throw std::invalid_argument("decode: vector length mismatch");
    }
    Coloring c(q.num_vertices(), q.num_colors());
    for (int v = 0; v < q.num_vertices(); ++v) {
        int set_color = -1;
        int set_bits = 0;
        for (int col = 0; col < q.num_colors(); ++col) {
            if (x[v * q.num_colors() + col]) {
                ++set_bits;
                set_color = col;
            }
        }
        if (set_bits == 1) c.assign(v, set_color);
    }
    return c;
}

} // namespace rsiplan
