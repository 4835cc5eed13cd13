#include "coxh4/serialize.hpp"

#include <sstream>

namespace coxh4 {

std::string serialize_polynomial(const Polynomial& p) {
    std::ostringstream out;
    out << "poly " << ctx_name(p.ctx()) << " " << p.term_count() << "\n";
    for (const auto& t : p.terms()) {
        auto e = t.mono.exps();
        for (int i = 0; i < kNumVars; ++i) out << e[i] << " ";
        out << t.coeff.str() << "\n";
    }
    return out.str();
}

Polynomial parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    std::string tag, ctxs;
    std::size_t n;
    if (!(in >> tag >> ctxs >> n) || tag != "poly")
        throw std::invalid_argument("bad polynomial header");
    Ctx ctx = ctxs == "x" ? Ctx::cart : Ctx::tau;
    Polynomial p(ctx);
    for (std::size_t k = 0; k < n; ++k) {
        std::array<int, kNumVars> e{};
        for (int i = 0; i < kNumVars; ++i)
            if (!(in >> e[i])) throw std::invalid_argument("truncated polynomial");
        std::string coeff;
        if (!(in >> coeff)) throw std::invalid_argument("truncated polynomial");
        p.raw_push(Mono::from_exps(e), Scalar::parse(coeff));
    }
    p.normalize();
    return p;
}

std::string serialize_operator(const DiffOperator& op) {
    std::ostringstream out;
    out << "diffop " << ctx_name(op.ctx()) << " " << op.terms().size() << "\n";
    for (const auto& t : op.terms()) {
        out << t.deriv[0] << " " << t.deriv[1] << " " << t.deriv[2] << " " << t.deriv[3] << "\n";
        out << serialize_polynomial(t.coeff);
    }
    return out.str();
}

DiffOperator parse_operator(const std::string& text) {
    std::istringstream in(text);
    std::string tag, ctxs;
    std::size_t n;
    if (!(in >> tag >> ctxs >> n) || tag != "diffop")
        throw std::invalid_argument("bad operator header");
    Ctx ctx = ctxs == "x" ? Ctx::cart : Ctx::tau;
    std::vector<DiffOperator::Term> terms;
    std::string line;
    std::getline(in, line);
    for (std::size_t k = 0; k < n; ++k) {
        DerivIndex d{};
        if (!(in >> d[0] >> d[1] >> d[2] >> d[3])) throw std::invalid_argument("truncated operator");
        std::string hdr, pctx;
        std::size_t terms_n;
        if (!(in >> hdr >> pctx >> terms_n) || hdr != "poly")
            throw std::invalid_argument("bad coefficient header");
        Polynomial p(pctx == "x" ? Ctx::cart : Ctx::tau);
        for (std::size_t t = 0; t < terms_n; ++t) {
            std::array<int, kNumVars> e{};
            for (int i = 0; i < kNumVars; ++i) in >> e[i];
            std::string coeff;
            in >> coeff;
            p.raw_push(Mono::from_exps(e), Scalar::parse(coeff));
        }
        p.normalize();
        terms.push_back({d, std::move(p)});
    }
    return DiffOperator::from_terms(ctx, std::move(terms));
}

std::string serialize_matrix(const Matrix4& m) {
    std::ostringstream out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out << m.m[i][j].str() << (j == 3 ? "\n" : " ");
    return out.str();
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(data)));
    return buf;
}

}  // namespace coxh4
