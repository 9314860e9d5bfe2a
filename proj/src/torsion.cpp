#include "fmres/torsion.hpp"

#include <numeric>
#include <sstream>

namespace fmres {

namespace {

long long mod_reduce(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

TorsionPoint::TorsionPoint(long long m, std::vector<long long> c)
    : modulus(m), coords(std::move(c)) {
    if (modulus < 1) throw Error("torsion level must be positive");
    if (coords.empty() || coords.size() > 2)
        throw RankMismatch("torsion rank must be 1 or 2, got " + std::to_string(coords.size()));
    for (auto& a : coords) a = mod_reduce(a, modulus);
}

TorsionPoint TorsionPoint::zero(int rank, long long m) {
    if (rank < 1 || rank > 2) throw RankMismatch("torsion rank must be 1 or 2");
    return TorsionPoint(m, std::vector<long long>(static_cast<std::size_t>(rank), 0));
}

bool TorsionPoint::is_zero() const {
    for (long long a : coords)
        if (a != 0) return false;
    return true;
}

std::string TorsionPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) os << ",";
        os << coords[j] << "/" << modulus;
    }
    os << ")";
    return os.str();
}

long long order(const TorsionPoint& p) {
    long long d = 1;
    for (long long a : p.coords) {
        long long component = p.modulus / std::gcd(p.modulus, a);
        d = std::lcm(d, component);
    }
    return d;
}

TorsionPoint scalar_mul(long long k, const TorsionPoint& p) {
    std::vector<long long> c(p.coords.size());
    long long kr = k % p.modulus;
    if (kr < 0) kr += p.modulus;
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = (kr * p.coords[j]) % p.modulus;
    return TorsionPoint(p.modulus, std::move(c));
}

TorsionPoint add(const TorsionPoint& p, const TorsionPoint& q) {
    if (p.rank() != q.rank())
        throw RankMismatch("cannot add rank-" + std::to_string(p.rank()) +
                           " and rank-" + std::to_string(q.rank()) + " torsion points");
    long long level = std::lcm(p.modulus, q.modulus);
    long long fp = level / p.modulus;
    long long fq = level / q.modulus;
    std::vector<long long> c(p.coords.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = (p.coords[j] * fp + q.coords[j] * fq) % level;
    return TorsionPoint(level, std::move(c));
}

WCFiberKind WCFiberKind::multiplicative(long long n) {
    if (n < 1) throw Error("multiplicative fiber index must be >= 1");
    return {Tag::MultiplicativeIn, n};
}

int WCFiberKind::rank() const {
    switch (tag) {
        case Tag::SmoothElliptic: return 2;
        case Tag::MultiplicativeIn: return 1;
        case Tag::Trivial: return 0;
    }
    return 0;
}

std::string WCFiberKind::str() const {
    switch (tag) {
        case Tag::SmoothElliptic: return "smooth";
        case Tag::MultiplicativeIn: return "In";
        case Tag::Trivial: return "trivial";
    }
    return "trivial";
}

WCFiberKind WCFiberKind::parse(const std::string& s) {
    if (s == "smooth") return smooth();
    if (s == "In") return multiplicative(1);
    if (s == "trivial") return trivial();
    throw ParseError("unknown fiber kind: " + s);
}

} // namespace fmres
