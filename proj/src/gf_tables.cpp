#include "treelab/gf_tables.hpp"

#include <sstream>

namespace treelab {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Size: return "size";
        case Variant::InnerI: return "inner";
        case Variant::LeavesL: return "leaves";
        case Variant::OldLeafCount: return "old-leaf-count";
        case Variant::NeitherCount: return "neither-count";
    }
    return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    if (name == "size") return Variant::Size;
    if (name == "inner") return Variant::InnerI;
    if (name == "leaves") return Variant::LeavesL;
    if (name == "old-leaf-count") return Variant::OldLeafCount;
    if (name == "neither-count") return Variant::NeitherCount;
    return std::nullopt;
}

bool variant_supported(ReductionMode mode, Variant v) {
    if (v == Variant::Size) return true;
    switch (mode) {
        case ReductionMode::Leaves:
        case ReductionMode::Paths:
            return v == Variant::InnerI || v == Variant::LeavesL;
        case ReductionMode::OldLeaves:
            return false;
        case ReductionMode::OldPaths:
            return v == Variant::OldLeafCount || v == Variant::NeitherCount;
    }
    return false;
}

Integer GfTable::row_sum(int n) const {
    Integer s = 0;
    for (const auto& c : rows[n]) s += c;
    return s;
}

Integer GfTable::row_derivative_at_one(int n, int d) const {
    Integer s = 0;
    const auto& row = rows[n];
    for (size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        s += row[j] * falling_factorial(Integer(static_cast<long>(j)), d);
    }
    return s;
}

std::string GfTable::to_csv() const {
    std::ostringstream os;
    os << "n";
    size_t width = 0;
    for (int n = 1; n <= max_n; ++n) width = std::max(width, rows[n].size());
    for (size_t j = 0; j < width; ++j) os << ",v^" << j;
    os << "\n";
    for (int n = 1; n <= max_n; ++n) {
        os << n;
        for (size_t j = 0; j < width; ++j)
            os << "," << (j < rows[n].size() ? rows[n][j] : Integer(0)).get_str();
        os << "\n";
    }
    return os.str();
}

std::string GfTable::to_json() const {
    std::ostringstream os;
    os << "{\"mode\":\"" << mode_name(mode) << "\",\"variant\":\"" << variant_name(variant)
       << "\",\"rounds\":" << rounds << ",\"rows\":{";
    for (int n = 1; n <= max_n; ++n) {
        os << (n == 1 ? "" : ",") << "\"" << n << "\":[";
        for (size_t j = 0; j < rows[n].size(); ++j)
            os << (j ? "," : "") << "\"" << rows[n][j].get_str() << "\"";
        os << "]";
    }
    os << "}}";
    return os.str();
}

namespace {

Integer rational_to_integer(const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("gf_table: non-integral coefficient");
    return q.get_num();
}

void trim(SizePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_profile(GfTable& table, const Series& p, const Integer& count, int vexp, int min_pow) {
    if (count == 0) return;
    for (int n = std::max(1, min_pow); n <= table.max_n; ++n) {
        if (p[n] == 0) continue;
        auto& row = table.rows[n];
        if (static_cast<int>(row.size()) <= vexp) row.resize(vexp + 1, Integer(0));
        row[vexp] += count * rational_to_integer(p[n]);
    }
}

// Leaves/Paths: sum the Fibonacci kernel over (inner, leaf) profiles.
GfTable gf_table_leafcut(ReductionMode mode, Variant variant, int r, int reff, int N) {
    GfTable table{mode, variant, r, N, std::vector<SizePoly>(N + 1), std::vector<Integer>(N + 1, Integer(0))};
    Series A = Series::from_poly(fibonacci_poly(reff + 1).negated_argument(), N);
    Series B = Series::from_poly(fibonacci_poly(reff + 2).negated_argument(), N);
    Series Binv2 = (B * B).inverse();
    Series X = (A * A * Binv2).shifted_up(1);           // z A^2 / B^2
    Series Y = Binv2.shifted_up(reff + 1);              // z^{r+1} / B^2
    Series C0 = B.divided_by(A);
    Series Pk = C0;
    for (int k = 1; k * (reff + 1) <= N; ++k) {
        Pk = Pk * Y;
        Series Pik = Pk;
        for (int i = 0; i + k * (reff + 1) <= N; ++i) {
            Integer count = (i == 0 && k == 1) ? Integer(1) : narayana_number(i + k - 1, k);
            int vexp = variant == Variant::Size ? i + k : (variant == Variant::InnerI ? i : k);
            add_profile(table, Pik, count, vexp, i + k * (reff + 1));
            Pik = Pik * X;
        }
    }
    for (int n = 1; n <= N; ++n) {
        trim(table.rows[n]);
        table.vanished[n] = catalan(n - 1) - table.row_sum(n);
    }
    return table;
}

GfTable gf_table_oldleaves(int r, int N) {
    GfTable table{ReductionMode::OldLeaves, Variant::Size, r, N, std::vector<SizePoly>(N + 1),
                  std::vector<Integer>(N + 1, Integer(0))};
    Series Z = Series::from_poly(binary_height_poly(r), N).shifted_up(1);
    Series W = (Series::from_poly(binary_height_poly(r + 1), N) - Series::from_poly(binary_height_poly(r), N))
                   .shifted_up(1);
    add_profile(table, Z, Integer(1), 1, 1);
    Series Pk = Series::one(N);
    for (int k = 1; k * (r + 2) <= N; ++k) {
        Pk = Pk * W;
        Series Pkm = Pk;
        for (int m = 0; k * (r + 2) + m <= N; ++m) {
            Integer count = catalan(k - 1) * binomial(m + 2 * k - 2, m) * (Integer(1) << m);
            add_profile(table, Pkm, count, m + 2 * k, k * (r + 2) + m);
            Pkm = Pkm * Z;
        }
    }
    for (int n = 1; n <= N; ++n) trim(table.rows[n]);
    return table;
}

GfTable gf_table_oldpaths(Variant variant, int r, int N) {
    GfTable table{ReductionMode::OldPaths, variant, r, N, std::vector<SizePoly>(N + 1),
                  std::vector<Integer>(N + 1, Integer(0))};
    Series F1 = Series::from_poly(fibonacci_poly(r + 1).negated_argument(), N);
    Series F2 = Series::from_poly(fibonacci_poly(r + 2).negated_argument(), N);
    Series F2inv2 = (F2 * F2).inverse();
    Series fr = F1.divided_by(F2).shifted_up(1);    // z F_{r+1}(-z)/F_{r+2}(-z)
    Series gr = F2inv2.shifted_up(r + 2);           // z^{r+2}/F_{r+2}(-z)^2
    int z_vexp = (variant == Variant::OldLeafCount) ? 0 : 1;
    add_profile(table, fr, Integer(1), z_vexp, 1);
    Series Pk = Series::one(N);
    for (int k = 1; k * (r + 2) <= N; ++k) {
        Pk = Pk * gr;
        Series Pkm = Pk;
        for (int m = 0; k * (r + 2) + m <= N; ++m) {
            Integer count = catalan(k - 1) * binomial(m + 2 * k - 2, m) * (Integer(1) << m);
            int vexp = variant == Variant::Size ? m + 2 * k
                                                : (variant == Variant::OldLeafCount ? k : m);
            add_profile(table, Pkm, count, vexp, k * (r + 2) + m);
            Pkm = Pkm * fr;
        }
    }
    for (int n = 1; n <= N; ++n) trim(table.rows[n]);
    return table;
}

}  // namespace

GfTable gf_table(ReductionMode mode, Variant variant, int r, int N) {
    if (N < 1 || r < 0) throw std::invalid_argument("gf_table: need N >= 1, r >= 0");
    if (!variant_supported(mode, variant))
        throw std::invalid_argument(std::string("gf_table: variant ") + variant_name(variant) +
                                    " not defined for mode " + mode_name(mode));
    switch (mode) {
        case ReductionMode::Leaves:
            return gf_table_leafcut(mode, variant, r, r, N);
        case ReductionMode::Paths:
            return gf_table_leafcut(mode, variant, r, (1 << (r + 1)) - 2, N);
        case ReductionMode::OldLeaves:
            return gf_table_oldleaves(r, N);
        case ReductionMode::OldPaths:
            return gf_table_oldpaths(variant, r, N);
    }
    throw std::logic_error("gf_table: unreachable");
}

std::vector<Integer> leaves_nonsurvivor_counts(int r, int N) {
    std::vector<Integer> out(N + 1, Integer(0));
    Series num = Series::from_poly(fibonacci_poly(r).negated_argument(), N).shifted_up(1);
    Series den = Series::from_poly(fibonacci_poly(r + 1).negated_argument(), N);
    Series q = num.divided_by(den);
    for (int n = 1; n <= N; ++n) {
        if (q[n].get_den() != 1) throw std::logic_error("nonsurvivor count not integral");
        out[n] = q[n].get_num();
    }
    return out;
}

}  // namespace treelab
