#include "nmds/codes.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "nmds/error.hpp"

namespace nmds {

namespace {

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(const Field& F, std::vector<std::vector<Elem>>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Elem s = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Elem f = rows[i][c];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > limit / base) return limit + 1;
        v *= base;
    }
    return v;
}

/// Calls visit(message, codeword) once per projective class of nonzero messages
/// (last nonzero coordinate 1). Work is split by the leading-one position and the
/// coordinate just below it; each worker gets its own visitor from make_visitor.
template <class Visitor>
void for_each_projective_word(const GeneratorMatrix& g, const EnumerationOptions& options,
                              const std::function<Visitor()>& make_visitor, std::vector<Visitor>& visitors) {
    const Field& F = g.field();
    const std::uint32_t q = F.order();
    const std::size_t k = g.k();
    const std::size_t n = g.n();
    if (checked_power(q, k, options.budget) > options.budget) {
        throw BudgetExceeded("enumeration of q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                             " messages exceeds the budget");
    }
    // scaled[(i * q + a) * n + j] = a * g[i][j]
    std::vector<Elem> scaled(k * q * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::size_t j = 0; j < n; ++j) scaled[(i * q + a) * n + j] = F.mul(Elem{a}, g.at(i, j));

    struct Task {
        std::size_t lead;
        std::uint32_t below;  // value of coordinate lead-1 (unused when lead == 0)
    };
    std::vector<Task> tasks;
    for (std::size_t t = 0; t < k; ++t) {
        if (t == 0) {
            tasks.push_back({0, 0});
        } else {
            for (std::uint32_t a = 0; a < q; ++a) tasks.push_back({t, a});
        }
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
    visitors.clear();
    for (unsigned w = 0; w < workers; ++w) visitors.push_back(make_visitor());
    std::atomic<std::size_t> next{0};

    auto run = [&](Visitor& visit) {
        std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n));
        std::vector<Elem> message(k);
        // fills coordinates level-1 .. 0 of the message on top of partial[level]
        std::function<void(std::size_t)> descend = [&](std::size_t level) {
            if (level == 0) {
                visit(std::span<const Elem>(message), std::span<const Elem>(partial[0]));
                return;
            }
            const std::size_t i = level - 1;
            for (std::uint32_t a = 0; a < q; ++a) {
                message[i] = Elem{a};
                const Elem* row = &scaled[(i * q + a) * n];
                for (std::size_t j = 0; j < n; ++j) partial[i][j] = F.add(partial[level][j], row[j]);
                descend(i);
            }
        };
        for (std::size_t idx; (idx = next.fetch_add(1)) < tasks.size();) {
            const Task task = tasks[idx];
            std::fill(message.begin(), message.end(), F.zero());
            message[task.lead] = F.one();
            for (std::size_t j = 0; j < n; ++j) partial[task.lead][j] = g.at(task.lead, j);
            if (task.lead == 0) {
                visit(std::span<const Elem>(message), std::span<const Elem>(partial[0]));
                continue;
            }
            const std::size_t i = task.lead - 1;
            message[i] = Elem{task.below};
            const Elem* row = &scaled[(i * q + task.below) * n];
            for (std::size_t j = 0; j < n; ++j) partial[i][j] = F.add(partial[task.lead][j], row[j]);
            descend(i);
        }
    };

    if (workers == 1) {
        run(visitors[0]);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, std::ref(visitors[w]));
    for (auto& t : pool) t.join();
}

std::size_t hamming_weight(std::span<const Elem> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return !e.is_zero(); }));
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(FieldPtr field, std::vector<std::vector<Elem>> rows)
    : field_(std::move(field)), rows_(std::move(rows)) {
    if (!field_) throw InvalidInput("generator matrix needs a field");
    if (rows_.empty() || rows_.front().empty()) throw InvalidInput("generator matrix must be nonempty");
    const std::size_t n = rows_.front().size();
    for (const auto& r : rows_) {
        if (r.size() != n) throw InvalidInput("generator matrix rows differ in length");
        for (const Elem e : r) {
            if (!field_->contains(e)) throw InvalidInput("matrix entry does not belong to the field");
        }
    }
    if (rows_.size() > n) throw InvalidInput("generator matrix needs k <= n");
    if (rank(*field_, rows_) != rows_.size()) {
        throw InvalidInput("generator matrix is rank deficient");
    }
}

GeneratorMatrix GeneratorMatrix::from_columns(FieldPtr field, std::span<const Point> columns) {
    std::vector<std::vector<Elem>> rows(3);
    for (const Point& p : columns)
        for (std::size_t i = 0; i < 3; ++i) rows[i].push_back(p.coords[i]);
    return GeneratorMatrix(std::move(field), std::move(rows));
}

std::vector<Elem> GeneratorMatrix::column(std::size_t j) const {
    std::vector<Elem> c;
    for (const auto& r : rows_) c.push_back(r.at(j));
    return c;
}

PointSet GeneratorMatrix::column_points() const {
    if (k() != 3) throw InvalidInput("column points need a 3-row matrix");
    PointSet out;
    for (std::size_t j = 0; j < n(); ++j) out.push_back(make_point(*field_, {rows_[0][j], rows_[1][j], rows_[2][j]}));
    return out;
}

std::size_t rank(const Field& field, std::vector<std::vector<Elem>> rows) {
    if (rows.empty()) return 0;
    return rref(field, rows, rows.front().size()).size();
}

std::vector<std::vector<Elem>> null_space(const Field& field, std::vector<std::vector<Elem>> rows, std::size_t width) {
    const auto pivots = rref(field, rows, width);
    std::vector<bool> is_pivot(width, false);
    for (const auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elem> x(width, field.zero());
        x[f] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(rows[r][f]);
        basis.push_back(std::move(x));
    }
    return basis;
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& c : counts_) t += c;
    return t;
}

std::size_t WeightDistribution::min_weight() const {
    for (std::size_t w = 1; w < counts_.size(); ++w) {
        if (counts_[w] != 0) return w;
    }
    return 0;
}

std::vector<std::pair<std::size_t, BigInt>> WeightDistribution::nonzero_terms() const {
    std::vector<std::pair<std::size_t, BigInt>> out;
    for (std::size_t w = 0; w < counts_.size(); ++w) {
        if (counts_[w] != 0) out.emplace_back(w, counts_[w]);
    }
    return out;
}

std::size_t weight_of(const GeneratorMatrix& g, std::span<const Elem> message) {
    if (message.size() != g.k()) throw InvalidInput("message length must equal k");
    const Field& F = g.field();
    std::size_t w = 0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        Elem acc = F.zero();
        for (std::size_t i = 0; i < g.k(); ++i) acc = F.add(acc, F.mul(message[i], g.at(i, j)));
        w += !acc.is_zero();
    }
    return w;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g, const EnumerationOptions& options) {
    const std::size_t n = g.n();
    struct Tally {
        std::vector<std::uint64_t> counts;
        void operator()(std::span<const Elem>, std::span<const Elem> word) { ++counts[hamming_weight(word)]; }
    };
    std::vector<Tally> tallies;
    for_each_projective_word<Tally>(g, options, [n] { return Tally{std::vector<std::uint64_t>(n + 1, 0)}; }, tallies);
    WeightDistribution out(n);
    for (const auto& t : tallies)
        for (std::size_t w = 0; w <= n; ++w) out[w] += t.counts[w];
    for (std::size_t w = 1; w <= n; ++w) out[w] *= g.field().order() - 1;
    out[0] = 1;
    return out;
}

GeneratorMatrix dual_matrix(const GeneratorMatrix& g) {
    if (g.n() == g.k()) throw PreconditionFailed("the dual of an [n,n] code is the zero code");
    return GeneratorMatrix(g.field_ptr(), null_space(g.field(), g.rows(), g.n()));
}

std::optional<std::size_t> dual_distance(const GeneratorMatrix& g, std::size_t max_subset) {
    const std::size_t n = g.n();
    const std::size_t k = g.k();
    std::vector<std::vector<Elem>> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(g.column(j));
    for (std::size_t s = 1; s <= std::min(max_subset, n); ++s) {
        // any k+1 columns are dependent
        if (s > k) return s;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<std::vector<Elem>> sub;
            for (const auto i : idx) sub.push_back(cols[i]);
            if (rank(g.field(), std::move(sub)) < s) return s;
            std::size_t pos = s;
            while (pos-- > 0 && idx[pos] == n - s + pos) {
            }
            if (pos == static_cast<std::size_t>(-1)) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

std::string_view to_string(CodeClass c) {
    switch (c) {
        case CodeClass::mds: return "MDS";
        case CodeClass::amds: return "AMDS";
        case CodeClass::nmds: return "NMDS";
        case CodeClass::other: return "other";
    }
    return "other";
}

CodeProfile classify(const GeneratorMatrix& g, const WeightDistribution& distribution) {
    CodeProfile p;
    p.n = g.n();
    p.k = g.k();
    p.d = distribution.min_weight();
    p.defect = static_cast<long long>(p.n) - static_cast<long long>(p.k) + 1 - static_cast<long long>(p.d);
    p.d_dual = dual_distance(g);
    if (p.d_dual) p.defect_dual = static_cast<long long>(p.k) + 1 - static_cast<long long>(*p.d_dual);
    if (p.defect == 0) {
        p.code_class = CodeClass::mds;
    } else if (p.defect == 1) {
        p.code_class = p.defect_dual == 1 ? CodeClass::nmds : CodeClass::amds;
    }
    return p;
}

CodeProfile classify(const GeneratorMatrix& g, const EnumerationOptions& options) {
    return classify(g, weight_distribution(g, options));
}

BigInt binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt out = 1;
    for (long long i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

NmdsDistributions nmds_closed_form(std::size_t n, std::size_t k, std::uint64_t q, const BigInt& a_min) {
    if (k == 0 || k >= n) throw InvalidInput("NMDS parameters need 1 <= k < n");
    const auto N = static_cast<long long>(n);
    const auto K = static_cast<long long>(k);
    auto qpow = [q](long long e) {
        BigInt v = 1;
        for (long long i = 0; i < e; ++i) v *= q;
        return v;
    };
    auto sign = [](long long j) { return j % 2 == 0 ? 1 : -1; };

    NmdsDistributions out{WeightDistribution(n), WeightDistribution(n)};
    out.code[0] = 1;
    out.code[n - k] = a_min;
    for (long long s = 1; s <= K; ++s) {
        BigInt sum = 0;
        for (long long j = 0; j < s; ++j) sum += sign(j) * binomial(N - K + s, j) * (qpow(s - j) - 1);
        out.code[n - k + s] = binomial(N, K - s) * sum + sign(s) * binomial(K, s) * a_min;
    }
    out.dual[0] = 1;
    out.dual[k] = a_min;
    for (long long s = 1; s <= N - K; ++s) {
        BigInt sum = 0;
        for (long long j = 0; j < s; ++j) sum += sign(j) * binomial(K + s, j) * (qpow(s - j) - 1);
        out.dual[k + s] = binomial(N, K + s) * sum + sign(s) * binomial(N - K, s) * a_min;
    }
    for (const auto* dist : {&out.code, &out.dual}) {
        for (const auto& c : dist->counts()) {
            if (c < 0) throw InvalidInput("closed form produced a negative count; A_{n-k} is inconsistent");
        }
    }
    return out;
}

std::vector<std::array<std::size_t, 3>> min_weight_supports(const GeneratorMatrix& g) {
    const Field& F = g.field();
    const PointSet pts = g.column_points();
    std::vector<Point> sorted(pts);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("generator matrix has proportional columns");
    }
    std::map<Line, std::vector<std::size_t>> on_line;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            auto& members = on_line[line_through(F, pts[i], pts[j])];
            if (members.empty() || members.front() == i) {
                if (members.empty()) members.push_back(i);
                members.push_back(j);
            }
        }
    }
    std::vector<std::array<std::size_t, 3>> out;
    for (const auto& [line, members] : on_line) {
        if (members.size() > 3) throw InvalidInput("four or more columns are collinear");
        if (members.size() == 3) out.push_back({members[0], members[1], members[2]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

PairingVerdict min_weight_pairing_check(const GeneratorMatrix& g, const EnumerationOptions& options) {
    const Field& F = g.field();
    const std::size_t n = g.n();
    const std::size_t k = g.k();
    const auto distribution = weight_distribution(g, options);
    const auto profile = classify(g, distribution);
    if (profile.code_class != CodeClass::nmds) throw PreconditionFailed("pairing check requires an NMDS code");

    // Minimum-weight dual codewords have weight k; each lies in the null space of
    // k columns. Enumerate every k-subset and keep those with a full-support null vector.
    std::map<std::vector<std::size_t>, std::size_t> dual_classes;  // support -> projective classes
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<std::vector<Elem>> sub(k);
        for (std::size_t r = 0; r < k; ++r)
            for (const auto c : idx) sub[r].push_back(g.at(r, c));
        const auto basis = null_space(F, std::move(sub), k);
        if (basis.size() == 1 &&
            std::none_of(basis[0].begin(), basis[0].end(), [](Elem e) { return e.is_zero(); })) {
            ++dual_classes[idx];
        } else if (basis.size() > 1) {
            // a 2-dimensional null space contains words of weight < k
            throw PreconditionFailed("dual code has weight below k");
        }
        std::size_t pos = k;
        while (pos-- > 0 && idx[pos] == n - k + pos) {
        }
        if (pos == static_cast<std::size_t>(-1)) break;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }

    struct Pairing {
        const std::map<std::vector<std::size_t>, std::size_t>* dual;
        std::size_t target;
        std::size_t checked = 0;
        std::size_t failures = 0;
        void operator()(std::span<const Elem>, std::span<const Elem> word) {
            std::vector<std::size_t> zeros;
            for (std::size_t j = 0; j < word.size(); ++j) {
                if (word[j].is_zero()) zeros.push_back(j);
            }
            if (word.size() - zeros.size() != target) return;
            ++checked;
            // a weight-k dual support is disjoint from supp(c) iff it equals the zero set of c
            const auto it = dual->find(zeros);
            if (it == dual->end() || it->second != 1) ++failures;
        }
    };
    std::vector<Pairing> results;
    for_each_projective_word<Pairing>(
        g, options, [&] { return Pairing{&dual_classes, n - k}; }, results);

    PairingVerdict v;
    for (const auto& r : results) {
        v.codewords_checked += r.checked;
        v.failures += r.failures;
    }
    std::size_t dual_count = 0;
    for (const auto& [support, classes] : dual_classes) dual_count += classes;
    v.a_min = distribution[n - k];
    v.a_min_dual = BigInt(dual_count) * (F.order() - 1);
    v.pass = v.failures == 0 && v.a_min == v.a_min_dual;
    std::ostringstream detail;
    detail << v.codewords_checked << " minimum-weight classes checked, " << v.failures << " without a unique partner; A_"
           << (n - k) << " = " << v.a_min << ", dual A_" << k << " = " << v.a_min_dual;
    v.detail = detail.str();
    return v;
}

std::string format_matrix(const GeneratorMatrix& g, Notation notation) {
    const Field& F = g.field();
    std::ostringstream out;
    out << "q=" << F.order() << " " << F.descriptor() << "\n";
    for (const auto& row : g.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << F.format(row[j], notation);
        out << "\n";
    }
    return out.str();
}

GeneratorMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    FieldPtr field;
    std::vector<std::vector<Elem>> rows;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!field) {
            field = Field::parse_descriptor(line);
            continue;
        }
        std::istringstream tokens(line);
        std::vector<Elem> row;
        for (std::string tok; tokens >> tok;) row.push_back(field->parse_element(tok));
        rows.push_back(std::move(row));
    }
    if (!field) throw InvalidInput("matrix text is missing its field header");
    if (rows.empty()) throw InvalidInput("matrix text has no rows");
    return GeneratorMatrix(field, std::move(rows));
}

}  // namespace nmds
