#include "k0forge/engine.hpp"

#include <random>
#include <sstream>

namespace k0forge {

std::pair<Int, Int> ConstructionParams::validate() const {
    if (k <= 0 || k >= 1) throw InvalidParams("k must satisfy 0 < k < 1");
    if (stages < 1) throw InvalidParams("stage count must be >= 1");
    Int a = k.get_num();
    Int b = k.get_den();
    Supernatural nprime = n.divide_by(b);  // throws when b does not divide n
    if (!nprime.is_infinite())
        throw InvalidParams("n/b must be infinite (infinitely generated target group)");
    return {a, b};
}

Int Window::first_member() const {
    Int n0 = lower_exclusive + 1;
    if (n0 < 1) n0 = 1;
    Int rem;
    mpz_mod(rem.get_mpz_t(), n0.get_mpz_t(), modulus.get_mpz_t());
    Int delta = residue - rem;
    if (delta < 0) delta += modulus;
    Int n = n0 + delta;
    if (upper_inclusive && n > *upper_inclusive)
        throw EmptyWindow("no integer in (" + lower_exclusive.get_str() + ", " +
                          upper_inclusive->get_str() + "] congruent to " + residue.get_str() +
                          " mod " + modulus.get_str());
    return n;
}

Int Window::nth_member(std::uint64_t i) const {
    Int n = first_member() + Int(static_cast<unsigned long>(i)) * modulus;
    if (upper_inclusive && n > *upper_inclusive)
        throw EmptyWindow("window member index out of range");
    return n;
}

std::uint64_t Window::member_count(std::uint64_t cap) const {
    Int first;
    try {
        first = first_member();
    } catch (const EmptyWindow&) {
        return 0;
    }
    if (!upper_inclusive) return cap;
    Int count = (*upper_inclusive - first) / modulus + 1;
    if (count > Int(static_cast<unsigned long>(cap))) return cap;
    return count.get_ui();
}

Stage init_stage(const ConstructionParams& params, std::vector<Certificate>* certs) {
    auto [a, b] = params.validate();
    Stage s;
    s.j = 1;
    s.L = b;
    s.m_factors = a + 1;
    s.g = StandardForm{a + 1, a};
    s.dim_g = 1;
    s.dim_p = b;
    s.unit_int = b;
    s.k_j = 1;
    s.l0 = 0;
    s.l1 = 1;
    s.l = a;
    s.q_j = 3 * s.k_j * (2 * s.dim_p + 2 * s.m_factors);
    relative_order(s);  // oracle must agree with l_1 = a
    if (certs) {
        certs->push_back(kernel_check(s, 5));
        certs->push_back(cancellation_check(s));
    }
    return s;
}

Window feasible_window(const Stage& stage, const Int& L_next) {
    Int c = stage.k_j * stage.q_j * stage.dim_p;
    const Int& P = stage.m_factors;
    const Int& dg = stage.dim_g;
    Int l_next = L_next * stage.l;

    Int denom = L_next * P - l_next * dg;
    std::ostringstream constraints;
    constraints << "upper-cone: " << l_next.get_str() << "*(n+" << c.get_str() << ")*"
                << dg.get_str() << "/" << L_next.get_str() << " < " << P.get_str()
                << "*n; floor: (" << Int(l_next + 1).get_str() << ")*(n+" << c.get_str() << ")*"
                << dg.get_str() << "/" << L_next.get_str() << " >= " << P.get_str()
                << "*n; divisibility: " << L_next.get_str() << " | n+" << c.get_str()
                << "; growth: n+" << c.get_str() << " > " << Int(3 * stage.k_j * stage.k_j).get_str();
    if (denom <= 0)
        throw EmptyWindow("degenerate stage: L*m_factors <= l_{j+1}*dim_g, no n satisfies the "
                          "strict cone bound [" + constraints.str() + "]");

    Window w;
    Int lowA;
    mpz_fdiv_q(lowA.get_mpz_t(), Int(l_next * c * dg).get_mpz_t(), denom.get_mpz_t());
    Int lowB = 3 * stage.k_j * stage.k_j - c;  // mult > k_{j+1} k_j
    w.lower_exclusive = std::max(std::max(lowA, lowB), Int(0));

    Int d2 = L_next * P - (l_next + 1) * dg;
    if (d2 > 0) {
        Int up;
        mpz_fdiv_q(up.get_mpz_t(), Int((l_next + 1) * dg * c).get_mpz_t(), d2.get_mpz_t());
        w.upper_inclusive = up;
    }
    w.modulus = L_next;
    mpz_mod(w.residue.get_mpz_t(), Int(-c).get_mpz_t(), L_next.get_mpz_t());

    if (w.member_count(1) == 0)
        throw EmptyWindow("empty feasibility window [" + constraints.str() + "]");
    return w;
}

namespace {

void require_holds(const std::vector<Certificate>& certs) {
    for (const Certificate& c : certs)
        if (!c.holds)
            throw CertificateFailure("certificate '" + c.name + "' failed: " + c.detail);
}

}  // namespace

Stage advance(Stage& stage, const Int& L_next, const Int& n,
              std::vector<Certificate>* edge_certs, std::vector<Certificate>* next_certs) {
    Int c = stage.k_j * stage.q_j * stage.dim_p;
    Int mult = n + c;
    if (mult % L_next != 0)
        throw CertificateFailure("divisibility certificate failed: " + L_next.get_str() +
                                 " does not divide mult = " + mult.get_str());
    stage.mult = mult;
    stage.r = 2 * mult;
    stage.s = mult;

    Stage next;
    next.j = stage.j + 1;
    next.L = L_next;
    next.m_factors = stage.m_factors * n;
    next.dim_g = (mult / L_next) * stage.dim_g;
    next.dim_p = mult * stage.dim_p;
    next.unit_int = stage.unit_int * L_next;
    next.k_j = 3 * stage.k_j;
    next.l0 = 2 * stage.l0 + stage.l1;
    next.l1 = 2 * stage.l1 + stage.l0;
    next.l = L_next * stage.l;
    next.g = StandardForm{next.m_factors, next.m_factors - next.dim_g};
    next.q_j = 3 * next.k_j * (2 * next.dim_p + 2 * next.m_factors);
    next.n_prev = n;

    relative_order(next);  // throws when the oracle and the recursion diverge

    std::vector<Certificate> edge = intertwining_check(stage, next);
    auto checklist = simplicity_checklist(stage, next);
    edge.insert(edge.end(), checklist.begin(), checklist.end());
    require_holds(edge);
    if (edge_certs) edge_certs->insert(edge_certs->end(), edge.begin(), edge.end());

    std::vector<Certificate> own{kernel_check(next, 5), cancellation_check(next)};
    require_holds(own);
    if (next_certs) next_certs->insert(next_certs->end(), own.begin(), own.end());
    return next;
}

Report run(const ConstructionParams& params) {
    auto [a, b] = params.validate();
    (void)a;
    Supernatural nprime = params.n.divide_by(b);

    std::vector<StageRecord> records;
    records.push_back(StageRecord{});
    records.back().stage = init_stage(params, &records.back().certificates);

    unsigned long b_top = 0;  // largest prime of b; the enumeration resumes after it
    for (const auto& [p, e] : factorize(b)) b_top = std::max(b_top, p);
    std::vector<unsigned long> primes =
        params.stages > 1 ? enumerate_primes_from(nprime, params.stages - 1, b_top)
                          : std::vector<unsigned long>{};

    std::mt19937_64 rng(params.seed);
    for (unsigned long p : primes) {
        Int L(p);
        Window w = feasible_window(records.back().stage, L);
        Int n;
        if (params.policy == Policy::Minimal) {
            n = w.first_member();
        } else {
            std::uint64_t count = w.member_count(100);
            std::uniform_int_distribution<std::uint64_t> dist(0, count - 1);
            n = w.nth_member(dist(rng));
        }
        StageRecord rec;
        rec.stage = advance(records.back().stage, L, n, &records.back().certificates,
                            &rec.certificates);
        records.push_back(std::move(rec));
    }

    LimitGroup limit(params.k, params.n);
    for (const StageRecord& rec : records)
        limit.add_stage(CyclicOrder{rec.stage.l, rec.stage.unit_int}, rec.stage.L);

    PerforationWitness witness = limit.perforation_witness();
    std::vector<Rat> fractions;
    for (std::size_t j = 1; j <= limit.stage_count(); ++j)
        fractions.push_back(limit.cone_fraction(j));

    return Report{params, std::move(records), std::move(limit), witness, std::move(fractions)};
}

std::string policy_to_string(Policy policy, std::uint64_t seed) {
    return policy == Policy::Minimal ? "minimal" : "random:" + std::to_string(seed);
}

namespace {

nlohmann::ordered_json opt_str(const std::optional<Int>& v) {
    if (!v) return nullptr;
    return v->get_str();
}

void note_digits(nlohmann::ordered_json& digits, const char* key, const Int& v) {
    std::string s = v.get_str();
    std::size_t len = s.size() - (s[0] == '-' ? 1 : 0);
    if (len > 40) digits[key] = len;
}

}  // namespace

nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["params"] = {{"k", rat_to_string(report.params.k)},
                   {"supernatural", report.params.n.to_string()},
                   {"stages", report.params.stages},
                   {"policy", policy_to_string(report.params.policy, report.params.seed)},
                   {"enumeration", "round-robin"}};

    j["stages"] = nlohmann::ordered_json::array();
    for (const StageRecord& rec : report.stages) {
        const Stage& s = rec.stage;
        nlohmann::ordered_json row;
        row["j"] = s.j;
        row["L"] = s.L.get_str();
        row["n_prev"] = opt_str(s.n_prev);
        row["m_factors"] = s.m_factors.get_str();
        row["dim_g"] = s.dim_g.get_str();
        row["theta_m"] = s.g.m.get_str();
        row["dim_p"] = s.dim_p.get_str();
        row["unit"] = s.unit_int.get_str();
        row["k_j"] = s.k_j.get_str();
        row["l0"] = s.l0.get_str();
        row["l1"] = s.l1.get_str();
        row["l"] = s.l.get_str();
        row["q_j"] = s.q_j.get_str();
        row["mult"] = opt_str(s.mult);
        row["r"] = opt_str(s.r);
        row["s"] = opt_str(s.s);
        row["cone_min"] = Int(s.l + 1).get_str();
        row["cone_fraction"] = rat_to_string(make_rat(s.l + 1, s.unit_int));
        nlohmann::ordered_json digits = nlohmann::ordered_json::object();
        note_digits(digits, "m_factors", s.m_factors);
        note_digits(digits, "dim_g", s.dim_g);
        note_digits(digits, "theta_m", s.g.m);
        note_digits(digits, "dim_p", s.dim_p);
        note_digits(digits, "q_j", s.q_j);
        if (s.mult) note_digits(digits, "mult", *s.mult);
        if (!digits.empty()) row["digits"] = digits;
        row["certificates"] = nlohmann::ordered_json::array();
        for (const Certificate& c : rec.certificates)
            row["certificates"].push_back({{"name", c.name},
                                           {"holds", c.holds},
                                           {"detail", c.detail},
                                           {"anchor", c.anchor}});
        j["stages"].push_back(std::move(row));
    }

    nlohmann::ordered_json fractions = nlohmann::ordered_json::array();
    for (const Rat& f : report.fractions) fractions.push_back(rat_to_string(f));
    j["limit"] = {{"group",
                   {{"kind", "rationals-with-denominators"},
                    {"supernatural", report.params.n.to_string()}}},
                  {"cone", {{"kind", "above-k"}, {"k", rat_to_string(report.params.k)}}},
                  {"witness",
                   {{"x", rat_to_string(report.witness.x)}, {"n", report.witness.n.get_str()}}},
                  {"fractions", fractions}};
    return j;
}

std::string to_table(const Report& report) {
    std::ostringstream os;
    os << "construction: k = " << rat_to_string(report.params.k) << ", n = "
       << report.params.n.to_string() << ", stages = " << report.params.stages << ", policy = "
       << policy_to_string(report.params.policy, report.params.seed) << "\n\n";
    for (const StageRecord& rec : report.stages) {
        const Stage& s = rec.stage;
        os << "stage " << s.j << ": L=" << s.L.get_str() << " m_factors=" << s.m_factors.get_str()
           << " dim_g=" << s.dim_g.get_str() << " theta_m=" << s.g.m.get_str()
           << " dim_p=" << s.dim_p.get_str() << " unit=" << s.unit_int.get_str()
           << " k_j=" << s.k_j.get_str() << " (l0,l1)=(" << s.l0.get_str() << ","
           << s.l1.get_str() << ")"
           << " l=" << s.l.get_str() << " q_j=" << s.q_j.get_str();
        if (s.n_prev) os << " n_prev=" << s.n_prev->get_str();
        if (s.mult)
            os << " mult=" << s.mult->get_str() << " r=" << s.r->get_str()
               << " s=" << s.s->get_str();
        os << "\n  cone: smallest positive multiple " << Int(s.l + 1).get_str() << ", fraction "
           << rat_to_string(make_rat(s.l + 1, s.unit_int)) << "\n";
        for (const Certificate& c : rec.certificates)
            os << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail
               << "\n";
    }
    os << "\nlimit: G_n for n = " << report.params.n.to_string() << ", cone = {0} U (k, inf) with k = "
       << rat_to_string(report.params.k) << "\n";
    os << "perforation witness: x = " << rat_to_string(report.witness.x)
       << ", n = " << report.witness.n.get_str() << "\n";
    os << "cone fractions:";
    for (const Rat& f : report.fractions) os << " " << rat_to_string(f);
    os << "\n";
    return os.str();
}

}  // namespace k0forge
