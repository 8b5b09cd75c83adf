#include "brion/geom_core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace brion {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw UsageError(std::string("dimension mismatch in ") + what + ": " +
                         std::to_string(a) + " vs " + std::to_string(b));
    }
}

bool parse_integer(std::string_view s, Int& out) {
    if (s.empty()) {
        return false;
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

// Gauss-Jordan elimination to reduced row echelon form. Returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        const Rat inv = 1 / m[row][col];
        for (auto& x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) {
                continue;
            }
            const Rat f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) {
                m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void require_rectangular(const RatMatrix& a) {
    for (const auto& row : a) {
        require_same_size(row.size(), a.front().size(), "matrix rows");
    }
}

} // namespace

Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) {
        throw UsageError("zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
        trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.remove_suffix(1);
    }
    Int num;
    Int den = 1;
    const auto slash = trimmed.find('/');
    bool ok = parse_integer(trimmed.substr(0, slash), num);
    if (ok && slash != std::string_view::npos) {
        auto den_text = trimmed.substr(slash + 1);
        ok = !den_text.empty() && den_text[0] != '-' && den_text[0] != '+' &&
             parse_integer(den_text, den);
    }
    if (!ok) {
        throw UsageError("malformed rational literal '" + std::string(text) + "'");
    }
    if (den == 0) {
        throw UsageError("zero denominator in rational literal '" + std::string(text) + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

RatVector to_rat(std::span<const Int> v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& z : v) {
        out.emplace_back(z);
    }
    return out;
}

bool is_integral(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.get_den() == 1; });
}

IntVector to_int(std::span<const Rat> v) {
    if (!is_integral(v)) {
        throw UsageError("vector " + to_string(v) + " is not integral");
    }
    IntVector out;
    out.reserve(v.size());
    for (const auto& r : v) {
        out.push_back(r.get_num());
    }
    return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    require_same_size(a.size(), b.size(), "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Rat dot(std::span<const Int> a, std::span<const Rat> b) {
    require_same_size(a.size(), b.size(), "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    require_same_size(a.size(), b.size(), "dot");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

RatVector add(std::span<const Rat> a, std::span<const Rat> b) {
    require_same_size(a.size(), b.size(), "add");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

RatVector sub(std::span<const Rat> a, std::span<const Rat> b) {
    require_same_size(a.size(), b.size(), "sub");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

RatVector scale(std::span<const Rat> a, const Rat& s) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] * s;
    }
    return out;
}

RatVector negate(std::span<const Rat> a) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

IntVector negate(std::span<const Int> a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

bool is_zero(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return sgn(r) == 0; });
}

bool is_zero(std::span<const Int> v) {
    return std::all_of(v.begin(), v.end(), [](const Int& z) { return sgn(z) == 0; });
}

IntVector primitive(std::span<const Int> v) {
    if (is_zero(v)) {
        throw UsageError("primitive: zero vector has no direction");
    }
    Int g = 0;
    for (const auto& z : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    IntVector out(v.begin(), v.end());
    for (auto& z : out) {
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    }
    return out;
}

IntVector primitive_direction(std::span<const Rat> v) {
    Int l = 1;
    for (const auto& r : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    }
    IntVector scaled;
    scaled.reserve(v.size());
    for (const auto& r : v) {
        Rat s = r * l;
        scaled.push_back(s.get_num());
    }
    return primitive(scaled);
}

std::string to_string(std::span<const Rat> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << to_string(v[i]);
    }
    os << ')';
    return os.str();
}

std::string to_string(std::span<const Int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i].get_str();
    }
    os << ')';
    return os.str();
}

RatMatrix identity(std::size_t n) {
    RatMatrix m(n, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

RatMatrix transpose(const RatMatrix& a) {
    if (a.empty()) {
        return {};
    }
    require_rectangular(a);
    RatMatrix t(a.front().size(), RatVector(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a[r].size(); ++c) {
            t[c][r] = a[r][c];
        }
    }
    return t;
}

RatVector mat_vec(const RatMatrix& a, std::span<const Rat> x) {
    RatVector out;
    out.reserve(a.size());
    for (const auto& row : a) {
        out.push_back(dot(row, x));
    }
    return out;
}

std::size_t rank(const RatMatrix& a) {
    if (a.empty()) {
        return 0;
    }
    require_rectangular(a);
    RatMatrix m = a;
    return rref(m, m.front().size()).size();
}

Rat det(const RatMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) {
            throw UsageError("det: matrix is not square");
        }
    }
    RatMatrix m = a;
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && sgn(m[sel][col]) == 0) {
            ++sel;
        }
        if (sel == n) {
            return 0;
        }
        if (sel != col) {
            std::swap(m[sel], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) {
                continue;
            }
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return d;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, std::span<const Rat> b,
                                      std::optional<std::size_t> columns) {
    require_same_size(b.size(), a.size(), "solve_linear right-hand side");
    std::size_t n = columns.value_or(a.empty() ? 0 : a.front().size());
    if (!a.empty()) {
        require_rectangular(a);
        require_same_size(a.front().size(), n, "solve_linear columns");
    }
    RatMatrix m = a;
    for (std::size_t r = 0; r < m.size(); ++r) {
        m[r].push_back(b[r]);
    }
    const auto pivots = rref(m, n);
    for (std::size_t r = pivots.size(); r < m.size(); ++r) {
        if (sgn(m[r][n]) != 0) {
            return std::nullopt;
        }
    }
    RatVector x(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = m[r][n];
    }
    return x;
}

std::vector<RatVector> kernel_basis(const RatMatrix& a, std::size_t columns) {
    if (!a.empty()) {
        require_rectangular(a);
        require_same_size(a.front().size(), columns, "kernel_basis columns");
    }
    RatMatrix m = a;
    const auto pivots = rref(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(columns, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) {
            throw UsageError("inverse: matrix is not square");
        }
    }
    RatMatrix m = a;
    for (std::size_t r = 0; r < n; ++r) {
        m[r].resize(2 * n, Rat(0));
        m[r][n + r] = 1;
    }
    if (rref(m, n).size() != n) {
        return std::nullopt;
    }
    RatMatrix inv(n);
    for (std::size_t r = 0; r < n; ++r) {
        inv[r].assign(m[r].begin() + static_cast<std::ptrdiff_t>(n), m[r].end());
    }
    return inv;
}

RatMatrix rows_of(const std::vector<IntVector>& rows) {
    RatMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        m.push_back(to_rat(r));
    }
    return m;
}

RatMatrix rows_of(const std::vector<RatVector>& rows) { return rows; }

void for_each_combination(std::size_t m, std::size_t k,
                          const std::function<void(std::span<const std::size_t>)>& visit) {
    if (k > m) {
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace brion
