#include "freeshift/measured.hpp"

#include <algorithm>
#include <cctype>

namespace freeshift {

namespace {

bool is_integer_text(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer abs_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

// Divides a vector by the gcd of its entries (no-op on the zero vector).
void make_primitive(std::vector<Integer>& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = abs_gcd(g, x);
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

std::vector<Integer> primitive_integers(const std::vector<Rational>& v)
{
    Integer l = 1;
    for (const auto& q : v)
        l = boost::multiprecision::lcm(l, denominator(q));
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& q : v)
        out.push_back(numerator(q) * (l / denominator(q)));
    make_primitive(out);
    return out;
}

std::string edge_name(const RauzyGraph& g, EdgeId e)
{
    const auto& r = g.edge(e);
    return "edge " + std::to_string(e) + " (" + g.vertex_name(r.source) + " -" + r.label.to_char() + "-> " +
           g.vertex_name(r.range) + ")";
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: \"" + text + "\"");
    const Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: \"" + text + "\"");
    return Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
}

std::string format_rational(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

bool MeasuredRauzyGraph::full_support() const
{
    return std::all_of(m.begin(), m.end(), [](const Rational& x) { return x > 0; });
}

bool MeasuredRauzyGraph::integral() const
{
    auto whole = [](const Rational& x) { return denominator(x) == 1; };
    return std::all_of(mu.begin(), mu.end(), whole) && std::all_of(m.begin(), m.end(), whole);
}

std::vector<BalanceViolation> validate_balance(const MeasuredRauzyGraph& g)
{
    const auto& graph = g.graph;
    std::vector<BalanceViolation> out;
    if (g.mu.size() != graph.vertex_count() || g.m.size() != graph.edge_count()) {
        out.push_back({"size", "weight tables do not match the graph", Rational(g.mu.size() + g.m.size()),
                       Rational(graph.vertex_count() + graph.edge_count())});
        return out;
    }
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        if (g.mu[v] < 0)
            out.push_back({"sign", "vertex " + graph.vertex_name(v), g.mu[v], Rational(0)});
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
        if (g.m[e] < 0)
            out.push_back({"sign", edge_name(graph, e), g.m[e], Rational(0)});
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        for (Letter s : graph.group().letters()) {
            Rational outgoing = 0;
            Rational incoming = 0;
            for (EdgeId e = 0; e < graph.edge_count(); ++e) {
                if (graph.edge(e).label != s)
                    continue;
                if (graph.edge(e).source == v)
                    outgoing += g.m[e];
                if (graph.edge(e).range == v)
                    incoming += g.m[e];
            }
            const std::string where = "vertex " + graph.vertex_name(v) + ", letter " + s.to_char();
            if (outgoing != g.mu[v])
                out.push_back({"out", where, outgoing, g.mu[v]});
            if (incoming != g.mu[v])
                out.push_back({"in", where, incoming, g.mu[v]});
        }
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const EdgeId b = graph.edge(e).bar;
        if (e < b && g.m[e] != g.m[b])
            out.push_back({"bar", edge_name(graph, e) + " and its reverse", g.m[e], g.m[b]});
    }
    return out;
}

UnbalancedHint::UnbalancedHint(std::vector<BalanceViolation> violations)
    : std::invalid_argument("hint violates " + std::to_string(violations.size()) + " balance condition(s)"),
      violations_(std::move(violations))
{
}

std::vector<std::vector<Integer>> balance_matrix(const RauzyGraph& g)
{
    const std::size_t nv = g.vertex_count();
    const std::size_t cols = nv + g.edge_count();
    std::vector<std::vector<Integer>> rows;
    for (VertexId v = 0; v < nv; ++v)
        for (Letter s : g.group().letters()) {
            std::vector<Integer> out_row(cols, 0), in_row(cols, 0);
            out_row[v] = -1;
            in_row[v] = -1;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (g.edge(e).label != s)
                    continue;
                if (g.edge(e).source == v)
                    out_row[nv + e] += 1;
                if (g.edge(e).range == v)
                    in_row[nv + e] += 1;
            }
            rows.push_back(std::move(out_row));
            rows.push_back(std::move(in_row));
        }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeId b = g.edge(e).bar;
        if (e < b) {
            std::vector<Integer> row(cols, 0);
            row[nv + e] = 1;
            row[nv + b] = -1;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& input, std::size_t columns)
{
    auto rows = input;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r][col] == 0)
            ++r;
        if (r == rows.size())
            continue;
        std::swap(rows[r], rows[rank]);
        const Integer piv = rows[rank][col];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            const Integer factor = rows[i][col];
            for (std::size_t j = 0; j < columns; ++j)
                rows[i][j] = piv * rows[i][j] - factor * rows[rank][j];
            make_primitive(rows[i]);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> x(columns, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            // keep the denominator positive; boost rejects negative ones
            Integer num = -rows[r][f];
            Integer den = rows[r][pivot_col[r]];
            if (den < 0) {
                num = -num;
                den = -den;
            }
            x[pivot_col[r]] = Rational(num, den);
        }
        basis.push_back(primitive_integers(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> positive_combination(const std::vector<std::vector<Integer>>& basis,
                                                          std::size_t dimension)
{
    const std::size_t k = basis.size();
    const std::size_t n = dimension;
    if (n == 0)
        return std::vector<Rational>(k, 0);
    if (k == 0)
        return std::nullopt;

    // Columns: λ⁺ (k), λ⁻ (k), surplus (n), artificial (n).
    const std::size_t vars = 2 * k + 2 * n;
    std::vector<std::vector<Rational>> tab(n, std::vector<Rational>(vars, 0));
    std::vector<Rational> rhs(n, 1);
    std::vector<std::size_t> basic(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            tab[i][j] = Rational(basis[j][i]);
            tab[i][k + j] = Rational(-basis[j][i]);
        }
        tab[i][2 * k + i] = -1;
        tab[i][2 * k + n + i] = 1;
        basic[i] = 2 * k + n + i;
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> cost(vars, 0);
    Rational objective = 0;
    for (std::size_t i = 0; i < n; ++i) {
        objective += rhs[i];
        for (std::size_t j = 0; j < 2 * k + n; ++j)
            cost[j] -= tab[i][j];
    }

    while (true) {
        std::size_t enter = vars;
        for (std::size_t j = 0; j < vars; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == vars)
            break;
        std::size_t leave = n;
        Rational best;
        for (std::size_t i = 0; i < n; ++i) {
            if (tab[i][enter] <= 0)
                continue;
            const Rational ratio = rhs[i] / tab[i][enter];
            if (leave == n || ratio < best || (ratio == best && basic[i] < basic[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == n)
            throw std::logic_error("phase-one simplex is unbounded");
        const Rational piv = tab[leave][enter];
        for (auto& x : tab[leave])
            x /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == leave || tab[i][enter] == 0)
                continue;
            const Rational f = tab[i][enter];
            for (std::size_t j = 0; j < vars; ++j)
                tab[i][j] -= f * tab[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        const Rational f = cost[enter];
        for (std::size_t j = 0; j < vars; ++j)
            cost[j] -= f * tab[leave][j];
        objective += f * rhs[leave];
        basic[leave] = enter;
    }
    if (objective != 0)
        return std::nullopt;

    std::vector<Rational> value(vars, 0);
    for (std::size_t i = 0; i < n; ++i)
        value[basic[i]] = rhs[i];
    std::vector<Rational> lambda(k);
    for (std::size_t j = 0; j < k; ++j)
        lambda[j] = value[j] - value[k + j];
    return lambda;
}

IntegerSolution integer_solution(const RauzyGraph& g, const std::optional<MeasuredRauzyGraph>& hint)
{
    const std::size_t nv = g.vertex_count();
    const std::size_t cols = nv + g.edge_count();
    const auto kernel = integer_kernel(balance_matrix(g), cols);
    IntegerSolution out;
    out.kernel_dimension = kernel.size();

    if (hint) {
        if (!(hint->graph == g))
            throw std::invalid_argument("hint belongs to a different graph");
        auto violations = validate_balance(*hint);
        if (!violations.empty())
            throw UnbalancedHint(std::move(violations));
        if (hint->full_support()) {
            Integer l = 1;
            for (const auto& q : hint->mu)
                l = boost::multiprecision::lcm(l, denominator(q));
            for (const auto& q : hint->m)
                l = boost::multiprecision::lcm(l, denominator(q));
            MeasuredRauzyGraph scaled = *hint;
            for (auto& q : scaled.mu)
                q *= l;
            for (auto& q : scaled.m)
                q *= l;
            out.route = "hint";
            out.measured = std::move(scaled);
            return out;
        }
    }

    out.route = "kernel";
    const auto lambda = positive_combination(kernel, cols);
    if (!lambda)
        return out;
    std::vector<Rational> x(cols, 0);
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < cols; ++i)
            x[i] += (*lambda)[j] * Rational(kernel[j][i]);
    const auto ints = primitive_integers(x);
    MeasuredRauzyGraph result{g, {}, {}};
    for (std::size_t i = 0; i < nv; ++i)
        result.mu.emplace_back(ints[i]);
    for (std::size_t i = nv; i < cols; ++i)
        result.m.emplace_back(ints[i]);
    out.measured = std::move(result);
    return out;
}

} // namespace freeshift
