#include "imlab/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "imlab/text.hpp"

namespace imlab {

namespace {

int mu_of_closed_neighborhood(const Graph& g, const VertexSet& x) {
    return matching_number(induced_subgraph(g, closed_neighborhood(g, x)).graph);
}

int bound_term(const Graph& g, const VertexSet& x) {
    return static_cast<int>(x.size()) - mu_of_closed_neighborhood(g, x);
}

}  // namespace

int theorem1_bound(const Graph& g, const VertexSet& x, const Budget& budget) {
    require_valid_for(g, x, "theorem1_bound");
    // X is an intersection of maximum independent sets iff at least one
    // contains it and the intersection of all that contain it gives X back.
    auto maximum_sets = all_maximum_independent_sets(g, budget);
    bool contained = false;
    VertexSet meet = g.vertex_set();
    for (const auto& s : maximum_sets) {
        if (s.contains_all(x)) {
            contained = true;
            meet = set_intersection(meet, s);
        }
    }
    if (!contained || !(meet == x))
        throw ContractError("theorem1_bound: X is not an intersection of maximum independent sets");
    return matching_number(g) + bound_term(g, x);
}

int core_bound(const Graph& g, const Budget& budget) {
    return matching_number(g) + bound_term(g, core(g, budget));
}

std::optional<int> best_pair_bound(const Graph& g, const Budget& budget) {
    auto maximum_sets = all_maximum_independent_sets(g, budget);
    if (maximum_sets.size() < 2) return std::nullopt;
    int best_term = 0;
    bool first = true;
    for (std::size_t i = 0; i < maximum_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < maximum_sets.size(); ++j) {
            int term = bound_term(g, set_intersection(maximum_sets[i], maximum_sets[j]));
            if (first || term < best_term) {
                best_term = term;
                first = false;
            }
        }
    }
    return matching_number(g) + best_term;
}

DegreeBoundCheck theorem2_check(const Graph& g, const Budget& budget) {
    DegreeBoundCheck c;
    c.lhs = static_cast<long long>(g.min_degree()) * independence_number(g, budget);
    c.rhs = static_cast<long long>(g.max_degree()) * matching_number(g);
    c.slack = c.rhs - c.lhs;
    return c;
}

std::optional<Rational> ratio_bound(const Graph& g, const Budget& budget) {
    (void)budget;
    if (g.min_degree() == 0) return std::nullopt;
    return Rational(static_cast<long long>(g.max_degree()) * matching_number(g),
                    g.min_degree());
}

Chain1 chain1_values(const Graph& g, const Budget& budget) {
    Chain1 c;
    int n = g.order();
    c.n_minus_2mu = n - 2 * matching_number(g);
    c.n_minus_2mu_star = n - 2 * minimum_maximal_matching_number(g, budget);
    c.alpha = independence_number(g, budget);
    c.n_minus_mu = n - matching_number(g);
    return c;
}

std::optional<RegularChain> regular_chain(const Graph& g, const Budget& budget) {
    if (!g.is_regular() || g.max_degree() == 0) return std::nullopt;
    RegularChain c;
    c.alpha = independence_number(g, budget);
    c.mu = matching_number(g);
    c.half_order = Rational(g.order(), 2);
    c.annihilation = annihilation_number(g);
    c.size_degree_bound = Rational(g.order()) - Rational(g.size(), g.max_degree());
    c.monotone = c.alpha <= c.mu && Rational(c.mu) <= c.half_order &&
                 c.half_order <= Rational(c.annihilation) &&
                 Rational(c.annihilation) <= c.size_degree_bound;
    return c;
}

Eq3Check eq3_check(const Graph& g, const Budget& budget) {
    Eq3Check c;
    c.n_minus_2mu_star = g.order() - 2 * minimum_maximal_matching_number(g, budget);
    c.mu = matching_number(g);
    bool regular_positive = g.is_regular() && g.max_degree() > 0;
    bool isolate_free_well_covered = g.min_degree() >= 1 && is_well_covered(g, budget);
    c.applicable = regular_positive || isolate_free_well_covered || core(g, budget).empty();
    c.holds = c.n_minus_2mu_star <= c.mu;
    return c;
}

BoundReport evaluate_all(const std::string& id, const Graph& g, const Budget& budget) {
    BoundReport r;
    r.id = id;
    r.record = compute_record(g, budget);

    auto maximum_sets = all_maximum_independent_sets(g, budget);
    VertexSet core_set = maximum_sets.front();
    for (const auto& s : maximum_sets) core_set = set_intersection(core_set, s);

    r.thm1_core.bound = r.record.mu + bound_term(g, core_set);
    r.thm1_core.slack = r.thm1_core.bound - r.record.alpha;
    if (maximum_sets.size() >= 2) {
        int best_term = 0;
        bool first = true;
        for (std::size_t i = 0; i < maximum_sets.size(); ++i)
            for (std::size_t j = i + 1; j < maximum_sets.size(); ++j) {
                int term = bound_term(g, set_intersection(maximum_sets[i], maximum_sets[j]));
                if (first || term < best_term) {
                    best_term = term;
                    first = false;
                }
            }
        BoundValue pair;
        pair.bound = r.record.mu + best_term;
        pair.slack = pair.bound - r.record.alpha;
        r.thm1_best_pair = pair;
    }

    r.thm2.lhs = static_cast<long long>(r.record.delta) * r.record.alpha;
    r.thm2.rhs = static_cast<long long>(r.record.big_delta) * r.record.mu;
    r.thm2.slack = r.thm2.rhs - r.thm2.lhs;

    r.chain1.n_minus_2mu = r.record.n - 2 * r.record.mu;
    r.chain1.n_minus_2mu_star = r.record.n - 2 * r.record.mu_star;
    r.chain1.alpha = r.record.alpha;
    r.chain1.n_minus_mu = r.record.n - r.record.mu;

    if (r.record.delta >= 1)
        r.ratio2 = Rational(static_cast<long long>(r.record.big_delta) * r.record.mu,
                            r.record.delta);

    r.eq3.n_minus_2mu_star = r.chain1.n_minus_2mu_star;
    r.eq3.mu = r.record.mu;
    bool regular_positive = r.record.delta == r.record.big_delta && r.record.big_delta > 0;
    bool ifwc = r.record.delta >= 1 && r.record.well_covered;
    r.eq3.applicable = regular_positive || ifwc || r.record.core_size == 0;
    r.eq3.holds = r.eq3.n_minus_2mu_star <= r.eq3.mu;

    r.problem1_equality = regular_positive && r.record.big_delta == 3 &&
                          r.record.alpha == r.record.mu;
    r.problem2_equality = r.thm2.slack == 0;

    r.boros_column = r.record.mu + r.record.core_size - 1;
    r.levit_column = r.record.mu + r.record.core_size -
                     static_cast<int>(open_neighborhood(g, core_set).size());

    // proven inequalities: negative slack can only mean a bug
    if (r.thm1_core.slack < 0) r.defects.push_back("thm1_core slack negative");
    if (r.thm1_best_pair && r.thm1_best_pair->slack < 0)
        r.defects.push_back("thm1_best_pair slack negative");
    if (r.thm2.slack < 0) r.defects.push_back("thm2 slack negative");
    if (!(r.chain1.n_minus_2mu <= r.chain1.n_minus_2mu_star &&
          r.chain1.n_minus_2mu_star <= r.chain1.alpha &&
          r.chain1.alpha <= r.chain1.n_minus_mu))
        r.defects.push_back("chain1 not monotone");
    if (r.ratio2 && Rational(r.record.alpha) > *r.ratio2)
        r.defects.push_back("ratio bound violated");
    if (r.eq3.applicable && !r.eq3.holds) r.defects.push_back("eq3 violated under its conditions");
    if ((regular_positive || ifwc || r.record.core_size == 0) && r.record.alpha > r.record.mu)
        r.defects.push_back("alpha <= mu violated under empty-core/well-covered/regular conditions");
    return r;
}

EqualityProfile theorem1_equality_profile(const Graph& g, const Budget& budget) {
    EqualityProfile p;
    auto maximum_sets = all_maximum_independent_sets(g, budget);
    int alpha = static_cast<int>(maximum_sets.front().size());
    int mu = matching_number(g);
    VertexSet core_set = maximum_sets.front();
    for (const auto& s : maximum_sets) core_set = set_intersection(core_set, s);
    p.core_equality = mu + bound_term(g, core_set) == alpha;
    for (std::size_t i = 0; i < maximum_sets.size(); ++i)
        for (std::size_t j = i + 1; j < maximum_sets.size(); ++j) {
            ++p.pair_count;
            if (mu + bound_term(g, set_intersection(maximum_sets[i], maximum_sets[j])) == alpha)
                ++p.tight_pairs;
        }
    p.pair_equality = p.tight_pairs > 0;
    return p;
}

GpqrExpectation gpqr_expectation(int p, int q, int r) {
    GpqrExpectation e;
    e.alpha = p + r;
    e.core_size = r;
    if (r >= q) {
        e.mu = p + q;
        e.item_d_paper = Rational(r - q);
        e.item_d_exact = r - q;
        e.parity_exact = true;
    } else {
        e.mu = p + (q + r) / 2;               // floor
        e.item_d_paper = Rational(r - q, 2);  // as written, may be half-integral
        e.item_d_exact = r - (q + r) / 2;     // = ceil((r-q)/2)
        e.parity_exact = (q - r) % 2 == 0;
    }
    return e;
}

std::string BoundReport::csv_header() {
    return "id," + InvariantRecord::csv_header() +
           ",thm1_core_bound,thm1_core_slack,thm1_pair_applicable,thm1_pair_bound,"
           "thm1_pair_slack,thm2_lhs,thm2_rhs,thm2_slack,chain1_n2mu,chain1_n2mustar,"
           "chain1_alpha,chain1_nmu,ratio2,eq3_applicable,eq3_lhs,eq3_mu,eq3_holds,"
           "problem1_equality,problem2_equality,boros_column,levit_column,defects";
}

std::string BoundReport::csv_row() const {
    std::ostringstream os;
    os << id << ',' << record.csv_row() << ',' << thm1_core.bound << ',' << thm1_core.slack
       << ',' << (thm1_best_pair ? 1 : 0) << ','
       << (thm1_best_pair ? std::to_string(thm1_best_pair->bound) : "") << ','
       << (thm1_best_pair ? std::to_string(thm1_best_pair->slack) : "") << ',' << thm2.lhs
       << ',' << thm2.rhs << ',' << thm2.slack << ',' << chain1.n_minus_2mu << ','
       << chain1.n_minus_2mu_star << ',' << chain1.alpha << ',' << chain1.n_minus_mu << ','
       << (ratio2 ? ratio2->to_string() : "") << ',' << (eq3.applicable ? 1 : 0) << ','
       << eq3.n_minus_2mu_star << ',' << eq3.mu << ',' << (eq3.holds ? 1 : 0) << ','
       << (problem1_equality ? 1 : 0) << ',' << (problem2_equality ? 1 : 0) << ','
       << boros_column << ',' << levit_column << ',';
    for (std::size_t i = 0; i < defects.size(); ++i)
        os << (i ? ";" : "") << defects[i];
    return os.str();
}

std::string BoundReport::to_json() const {
    std::ostringstream os;
    os << "{\"id\":\"" << json_escape(id) << "\",\"record\":" << record.to_json();
    os << ",\"thm1_core\":{\"bound\":" << thm1_core.bound << ",\"slack\":" << thm1_core.slack
       << ",\"equality\":" << (thm1_core.equality() ? "true" : "false") << '}';
    os << ",\"thm1_best_pair\":";
    if (thm1_best_pair)
        os << "{\"bound\":" << thm1_best_pair->bound << ",\"slack\":" << thm1_best_pair->slack
           << ",\"equality\":" << (thm1_best_pair->equality() ? "true" : "false") << '}';
    else
        os << "null";
    os << ",\"thm2\":{\"lhs\":" << thm2.lhs << ",\"rhs\":" << thm2.rhs
       << ",\"slack\":" << thm2.slack << '}';
    os << ",\"chain1\":[" << chain1.n_minus_2mu << ',' << chain1.n_minus_2mu_star << ','
       << chain1.alpha << ',' << chain1.n_minus_mu << ']';
    os << ",\"ratio2\":" << (ratio2 ? '"' + ratio2->to_string() + '"' : std::string("null"));
    os << ",\"eq3\":{\"applicable\":" << (eq3.applicable ? "true" : "false")
       << ",\"n_minus_2mu_star\":" << eq3.n_minus_2mu_star << ",\"mu\":" << eq3.mu
       << ",\"holds\":" << (eq3.holds ? "true" : "false") << '}';
    os << ",\"problem1_equality\":" << (problem1_equality ? "true" : "false");
    os << ",\"problem2_equality\":" << (problem2_equality ? "true" : "false");
    os << ",\"boros_column\":" << boros_column << ",\"levit_column\":" << levit_column;
    os << ",\"defects\":[";
    for (std::size_t i = 0; i < defects.size(); ++i)
        os << (i ? "," : "") << '"' << defects[i] << '"';
    os << "]}";
    return os.str();
}

std::string BoundReport::to_text() const {
    std::ostringstream os;
    os << "graph " << id << ": n=" << record.n << " m=" << record.m
       << " alpha=" << record.alpha << " mu=" << record.mu << '\n';
    os << "  thm1 core bound " << thm1_core.bound << " slack " << thm1_core.slack
       << (thm1_core.equality() ? " (equality)" : "") << '\n';
    if (thm1_best_pair)
        os << "  thm1 best pair bound " << thm1_best_pair->bound << " slack "
           << thm1_best_pair->slack << (thm1_best_pair->equality() ? " (equality)" : "")
           << '\n';
    else
        os << "  thm1 best pair: not applicable (unique maximum independent set)\n";
    os << "  thm2 " << thm2.lhs << " <= " << thm2.rhs << " slack " << thm2.slack
       << (thm2.slack == 0 ? " (equality)" : "") << '\n';
    os << "  chain1 " << chain1.n_minus_2mu << " <= " << chain1.n_minus_2mu_star
       << " <= " << chain1.alpha << " <= " << chain1.n_minus_mu << '\n';
    os << "  ratio ";
    if (ratio2)
        os << "alpha " << record.alpha << " <= " << ratio2->to_string() << '\n';
    else
        os << "not applicable (delta = 0)\n";
    os << "  eq3 " << (eq3.applicable ? "applicable" : "not applicable") << ": "
       << eq3.n_minus_2mu_star << " <= " << eq3.mu
       << (eq3.holds ? " holds" : " fails") << '\n';
    if (problem1_equality) os << "  problem1 equality witness (cubic, alpha = mu)\n";
    if (problem2_equality) os << "  problem2 equality witness (delta*alpha = Delta*mu)\n";
    for (const auto& d : defects) os << "  DEFECT: " << d << '\n';
    return os.str();
}

}  // namespace imlab
