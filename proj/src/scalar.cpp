#include "coxh4/scalar.hpp"

namespace coxh4 {

namespace {

std::string mpq_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_mpq(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace

std::string Scalar::str() const {
    if (irr_ == 0) return mpq_str(rat_);
    std::string out = mpq_str(rat_);
    if (irr_ > 0)
        out += "+" + mpq_str(irr_) + "*sqrt5";
    else
        out += "-" + mpq_str(mpq_class(-irr_)) + "*sqrt5";
    return out;
}

Scalar Scalar::parse(const std::string& s) {
    auto star = s.find("*sqrt5");
    if (star == std::string::npos) return Scalar(parse_mpq(s));
    // split at the sign that separates the two parts; skip a leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < star; ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '+' && s[i - 1] != '-') split = i;
    }
    if (split == std::string::npos) throw std::invalid_argument("bad scalar: " + s);
    mpq_class rat = parse_mpq(s.substr(0, split));
    mpq_class irr = parse_mpq(s.substr(split + 1, star - split - 1));
    if (s[split] == '-') irr = -irr;
    return Scalar(rat, irr);
}

}  // namespace coxh4
