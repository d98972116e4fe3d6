#include "alcove/geometry.hpp"

#include <algorithm>

namespace alcove {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long long wall_offset(const Hyperplane& hp, const Params& p) {
    if (!p.finite()) {
        if (hp.level != 0)
            throw InvalidParams("only level-0 hyperplanes exist at e = inf");
        return 0;
    }
    return hp.level * p.e;
}

}  // namespace

RhoShift rho_unchecked(const Params& p) {
    RhoShift out;
    out.reserve(static_cast<size_t>(p.rank()));
    for (int m = 0; m < p.ell; ++m)
        for (int c = 1; c <= p.h; ++c) {
            long long base = p.finite() ? p.e - p.kappa[m] : -p.kappa[m];
            out.push_back(base - (c - 1));
        }
    return out;
}

RhoShift rho(const Params& p) {
    RhoShift out = rho_unchecked(p);
    if (p.finite()) {
        int hl = p.rank();
        for (int a = 0; a < hl; ++a)
            for (int b = a + 1; b < hl; ++b)
                if ((out[a] - out[b]) % p.e == 0)
                    throw IrregularOrigin("origin lies on a hyperplane for this multicharge");
    }
    return out;
}

long long pairing(const Weight& x, int a, int b, const RhoShift& shift) {
    return (x[a] + shift[a]) - (x[b] + shift[b]);
}

std::vector<Hyperplane> walls_through(const Weight& x, const RhoShift& shift, const Params& p) {
    std::vector<Hyperplane> out;
    int hl = p.rank();
    for (int a = 0; a < hl; ++a)
        for (int b = a + 1; b < hl; ++b) {
            long long d = pairing(x, a, b, shift);
            if (p.finite()) {
                if (d % p.e == 0) out.push_back({a, b, d / p.e});
            } else {
                if (d == 0) out.push_back({a, b, 0});
            }
        }
    return out;
}

bool on_hyperplane(const Weight& x, const Hyperplane& hp, const RhoShift& shift, const Params& p) {
    return pairing(x, hp.a, hp.b, shift) == wall_offset(hp, p);
}

Side side_of(const Weight& x, const Hyperplane& hp, const RhoShift& shift, const Params& p) {
    long long re = wall_offset(hp, p);
    long long w = (shift[hp.a] - shift[hp.b]) - re;
    if (w == 0)
        throw DegenerateHyperplane("origin lies on the hyperplane");
    long long v = pairing(x, hp.a, hp.b, shift) - re;
    if (v == 0) return Side::On;
    return ((v > 0) == (w > 0)) ? Side::OriginSide : Side::FarSide;
}

Weight reflect_point(const Weight& x, const Hyperplane& hp, const RhoShift& shift, const Params& p) {
    long long re = wall_offset(hp, p);
    Weight out = x;
    long long ya = x[hp.a] + shift[hp.a];
    long long yb = x[hp.b] + shift[hp.b];
    out[hp.a] = (yb + re) - shift[hp.a];
    out[hp.b] = (ya - re) - shift[hp.b];
    return out;
}

long long length(const Weight& x, const RhoShift& shift, const Params& p) {
    long long total = 0;
    int hl = p.rank();
    for (int a = 0; a < hl; ++a)
        for (int b = a + 1; b < hl; ++b) {
            long long d = pairing(x, a, b, shift);
            long long d0 = shift[a] - shift[b];
            long long lo = std::min(d, d0), hi = std::max(d, d0);
            if (!p.finite()) {
                if (lo < 0 && 0 < hi) ++total;
                continue;
            }
            for (long long k = floor_div(lo, p.e) + 1; k * p.e < hi; ++k)
                if (k * p.e > lo) ++total;
        }
    return total;
}

bool is_e_regular(const Weight& x, const RhoShift& shift, const Params& p) {
    int hl = p.rank();
    for (int a = 0; a < hl; ++a)
        for (int b = a + 1; b < hl; ++b) {
            long long d = pairing(x, a, b, shift);
            if (p.finite() ? d % p.e == 0 : d == 0) return false;
        }
    return true;
}

bool is_dominant(const Weight& x, const Params& p) {
    for (int m = 0; m < p.ell; ++m)
        for (int i = 0; i + 1 < p.h; ++i)
            if (x[p.h * m + i] < x[p.h * m + i + 1]) return false;
    return true;
}

}  // namespace alcove
