#include "diameterlab/bounds.hpp"

#include <cmath>
#include <map>

#include "diameterlab/diameter.hpp"

namespace dlab {

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

double kalai_kleitman_clm(int n, int d) {
    if (n < 1 || d < 1) throw InputError("kalai_kleitman_clm: n,d >= 1");
    return std::pow(n, std::log2(static_cast<double>(d)) + 1.0) - 1.0;
}

long long barnette_larman_clm(int n, int d) {
    if (n < 1 || d < 1 || d > 62) throw InputError("barnette_larman_clm: range");
    return static_cast<long long>(n - 1) << (d - 1);
}

BoundReport polytope_bounds(int n, int d) {
    if (n <= d || d < 1) throw InputError("polytope_bounds: need n > d >= 1");
    BoundReport report;
    report.context = "polytope n=" + std::to_string(n) + " d=" + std::to_string(d);

    BoundEntry hirsch;
    hirsch.name = "hirsch";
    hirsch.kind = "conjectural";
    hirsch.value = n - d;
    hirsch.exact_rational = true;
    hirsch.rational = Rational(n - d);
    hirsch.note = "n-d; disproved in general but open as a rough guide";
    report.entries.push_back(hirsch);

    BoundEntry kk;
    kk.name = "kalai_kleitman";
    kk.kind = "upper";
    kk.value = std::pow(n, std::log2(static_cast<double>(d)) + 2.0);
    kk.note = "n^(log2 d + 2)";
    report.entries.push_back(kk);

    BoundEntry larman;
    larman.name = "larman";
    larman.kind = "upper";
    larman.value = std::pow(2.0, d - 3) * n;
    larman.note = "2^(d-3) n";
    report.entries.push_back(larman);

    BoundEntry barnette;
    barnette.name = "barnette";
    barnette.kind = "upper";
    barnette.value = (2.0 * n / 3.0) * std::pow(2.0, d - 3);
    barnette.note = "(2n/3) 2^(d-3)";
    report.entries.push_back(barnette);

    BoundEntry lower;
    lower.name = "lower";
    lower.kind = "lower";
    long long lo = static_cast<long long>(d - 1) * n / d - (d - 2);
    lower.value = static_cast<double>(lo);
    lower.exact_rational = true;
    lower.rational = Rational(lo);
    lower.note = "floor((d-1)n/d) - (d-2)";
    report.entries.push_back(lower);

    if (d == 3) {
        BoundEntry klee;
        klee.name = "klee_3d";
        klee.kind = "exact";
        long long v = 2LL * n / 3 - 1;
        klee.value = static_cast<double>(v);
        klee.exact_rational = true;
        klee.rational = Rational(v);
        klee.note = "floor(2n/3) - 1";
        report.entries.push_back(klee);
    }
    return report;
}

std::optional<long long> known_Hb(int n, int d) {
    if (d < 1 || n <= d) return std::nullopt;
    if (d == 1) return 1;
    if (d == 2) return n / 2;
    if (d == 3) return 2LL * n / 3 - 1;
    if (n < 2 * d) {
        int k = n - d;  // k < d, reduce to the 2k-facet case
        return known_Hb(2 * k, k);
    }
    static const std::map<std::pair<int, int>, long long> table = {
        {{8, 4}, 4},  {{9, 4}, 5},  {{10, 5}, 5}, {{10, 4}, 5}, {{11, 5}, 6},
        {{11, 4}, 6}, {{12, 6}, 6}, {{12, 4}, 7}, {{12, 5}, 7},
    };
    auto it = table.find({n, d});
    if (it != table.end()) return it->second;
    return std::nullopt;
}

StrongDstepResult strong_dstep(int n, int d, int l) {
    if (n <= 2 * d) throw InputError("strong_dstep: requires n > 2d");
    StrongDstepResult r;
    r.dimension = n - d;
    r.facets = 2 * (n - d);
    r.diameter_lb = l + (n - 2 * d);
    r.violates_hirsch = l > d;
    return r;
}

Rational spindle_excess(int n, int d, int l) {
    if (n <= d) throw InputError("spindle_excess: n > d");
    return Rational(l - d, n - d);
}

Rational asymptotic_excess(const Rational& eps, int k) {
    if (k < 1) throw InputError("asymptotic_excess: k >= 1");
    return eps * Rational(k - 1, k);
}

MswSpindle msw_spindle(int k) {
    if (k < 1) throw InputError("msw_spindle: k >= 1");
    MswSpindle s;
    s.facets = 12LL * k * (6LL * k - 1);
    s.width = 4 + k;
    s.excess = Rational(s.width - 5, s.facets - 5);
    return s;
}

BoundReport subdeterminant_bounds(int d, long long M, int n) {
    if (d < 1 || M < 1 || n < 1) throw InputError("subdeterminant_bounds: positive arguments");
    BoundReport report;
    report.context =
        "d=" + std::to_string(d) + " M=" + std::to_string(M) + " n=" + std::to_string(n);

    double dd = static_cast<double>(d);
    double Md = static_cast<double>(M);
    double factor = 1.0 + std::sqrt(2.0 / M_PI) / (Md * Md * std::pow(dd, 2.5));
    BoundEntry exp_entry;
    exp_entry.name = "expansion_factor";
    exp_entry.kind = "exact";
    exp_entry.value = factor;
    exp_entry.note = "1 + sqrt(2/pi)/(M^2 d^2.5)";
    report.entries.push_back(exp_entry);

    // ln(2^d d! d^(d/2) M^d): the ratio between the ball volume bound and the
    // minimum cone volume 1/(d! d^(d/2) M^d).
    double ln_ratio = dd * std::log(2.0) + std::lgamma(dd + 1.0) + (dd / 2.0) * std::log(dd) +
                      dd * std::log(Md);
    BoundEntry iters;
    iters.name = "iterations";
    iters.kind = "upper";
    iters.value = std::ceil(ln_ratio / std::log(factor));
    iters.note = "ceil(ln(2^d d! d^(d/2) M^d) / ln(expansion_factor))";
    report.entries.push_back(iters);

    BoundEntry diam;
    diam.name = "diameter_bound";
    diam.kind = "upper";
    diam.value = 2.0 * iters.value;
    diam.note = "two breadth-first trees meet";
    report.entries.push_back(diam);

    BoundEntry explicit_form;
    explicit_form.name = "explicit_form";
    explicit_form.kind = "upper";
    explicit_form.value = std::sqrt(M_PI / 2.0) * Md * Md * std::pow(dd, 2.5) * ln_ratio;
    explicit_form.note = "sqrt(pi/2) M^2 d^2.5 ln(2^d d! d^(d/2) M^d)";
    report.entries.push_back(explicit_form);

    BoundEntry ko;
    ko.name = "kleinschmidt_onn";
    ko.kind = "upper";
    ko.value = static_cast<double>(M) * d;
    ko.note = "kd for integer vertices in [0,k]^d, evaluated with k=M";
    report.entries.push_back(ko);

    BoundEntry df;
    df.name = "dyer_frieze";
    df.kind = "upper";
    df.value = std::pow(dd, 16) * std::pow(static_cast<double>(n), 3) *
               std::pow(std::log(dd * n), 3);
    df.constant_free = true;
    df.note = "d^16 n^3 (log dn)^3, constant-free";
    report.entries.push_back(df);
    return report;
}

BoundReport misc_bounds(int n, int d, int k) {
    if (n < 1 || d < 1 || k < 0) throw InputError("misc_bounds: bad arguments");
    BoundReport report;
    report.context =
        "n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k);

    BoundEntry np;
    np.name = "nonpure_upper";
    np.kind = "upper";
    np.value = std::pow(n, std::log2(static_cast<double>(n)) + 1.0);
    np.note = "n^(log2 n + 1)";
    report.entries.push_back(np);

    BoundEntry yu;
    yu.name = "support_sequence_upper";
    yu.kind = "upper";
    yu.value = std::pow(n, std::log2(static_cast<double>(n)) / 2.0);
    yu.note = "n^(log2(n)/2)";
    report.entries.push_back(yu);

    BoundEntry yl;
    yl.name = "support_sequence_lower_pow4";
    yl.kind = "lower";
    yl.value = std::pow(4.0, 0.5 * k * (k - 1));
    yl.note = "4^C(k,2) at n = 4^k";
    report.entries.push_back(yl);

    BoundEntry clc;
    clc.name = "clc_4d_lower";
    clc.kind = "lower";
    clc.value = d > 1 ? (static_cast<double>(d) * d / std::log2(static_cast<double>(d)))
                      : static_cast<double>(d);
    clc.constant_free = true;
    clc.note = "d^2/log d for layer complexes on 4d elements, constant-free";
    report.entries.push_back(clc);

    BoundEntry clc2_lower;
    clc2_lower.name = "clc_rank2_lower";
    clc2_lower.kind = "lower";
    clc2_lower.value = 2.0 * n - std::sqrt(static_cast<double>(n));
    clc2_lower.constant_free = true;
    clc2_lower.note = "2n - O(sqrt n), constant-free";
    report.entries.push_back(clc2_lower);

    BoundEntry clm2;
    clm2.name = "clm_rank2_exact";
    clm2.kind = "exact";
    clm2.value = 2.0 * n - 2.0;
    clm2.exact_rational = true;
    clm2.rational = Rational(2LL * n - 2);
    clm2.note = "2n-2";
    report.entries.push_back(clm2);

    BoundEntry conj;
    conj.name = "layer_conjecture";
    conj.kind = "conjectural";
    conj.value = static_cast<double>(d) * (n - 1);
    conj.exact_rational = true;
    conj.rational = Rational(static_cast<long long>(d) * (n - 1));
    conj.note = "d(n-1)";
    report.entries.push_back(conj);

    BoundEntry hkp_dim;
    hkp_dim.name = "hkp_dimension";
    hkp_dim.kind = "exact";
    hkp_dim.value = 2.0 * static_cast<double>(((k + 3) * (k + 3) + 3) / 4);
    hkp_dim.note = "2 ceil((k+3)^2/4): dimension with no weak k-decomposition";
    report.entries.push_back(hkp_dim);

    BoundEntry hkp_verts;
    hkp_verts.name = "hkp_vertices";
    hkp_verts.kind = "exact";
    hkp_verts.value = static_cast<double>((k + 3) * (k + 3) + 2);
    hkp_verts.note = "(k+3)^2 + 2";
    report.entries.push_back(hkp_verts);
    return report;
}

}  // namespace dlab
