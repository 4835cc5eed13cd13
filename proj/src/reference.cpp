#include "coxh4/reference.hpp"

#include <cctype>

#include "coxh4/special.hpp"

namespace coxh4::reference {

namespace {

// tau-context monomial  num/den * tau^(e1..e4) nu^en om^eo
Polynomial tm(long num, long den, int e1, int e2, int e3, int e4, int en = 0, int eo = 0) {
    return Polynomial::monomial(Ctx::tau, Mono::from_exps({e1, e2, e3, e4, en, eo}),
                                Scalar(num, den));
}

// 1 + k nu
Polynomial br(long k) {
    Polynomial p(Ctx::tau);
    p.raw_push(Mono(), Scalar(1));
    p.raw_push(Mono::var(kNu), Scalar(k));
    p.normalize();
    return p;
}

Polynomial omega_pow(int e) { return Polynomial::variable(Ctx::tau, kOmega, e); }
Polynomial tau1_pow(int e) { return Polynomial::variable(Ctx::tau, 0, e); }

}  // namespace

Polynomial hamiltonian_A(int i, int j) {
    if (i > j) std::swap(i, j);
    int key = 10 * (i + 1) + (j + 1);
    switch (key) {
        case 11: return tm(4, 1, 1, 0, 0, 0);
        case 12: return tm(24, 1, 0, 1, 0, 0);
        case 13: return tm(40, 1, 0, 0, 1, 0);
        case 14: return tm(60, 1, 0, 0, 0, 1);
        case 22: return tm(88, 1, 1, 0, 1, 0) + tm(8, 1, 5, 1, 0, 0);
        case 23: return tm(-4, 1, 3, 2, 0, 0) + tm(24, 1, 5, 0, 1, 0) + tm(-8, 1, 0, 0, 0, 1);
        case 24:
            return tm(10, 1, 2, 3, 0, 0) + tm(60, 1, 4, 1, 1, 0) + tm(40, 1, 5, 0, 0, 1) +
                   tm(-600, 1, 0, 0, 2, 0);
        case 33:
            return tm(-38, 3, 1, 3, 0, 0) + tm(28, 1, 3, 1, 1, 0) + tm(-8, 3, 4, 0, 0, 1);
        case 34:
            return tm(210, 1, 2, 2, 1, 0) + tm(60, 1, 3, 1, 0, 1) + tm(-180, 1, 4, 0, 2, 0) +
                   tm(30, 1, 0, 4, 0, 0);
        case 44:
            return tm(-2175, 1, 1, 3, 1, 0) + tm(-450, 1, 2, 2, 0, 1) + tm(-1350, 1, 3, 1, 2, 0) +
                   tm(-600, 1, 4, 0, 1, 1);
    }
    throw std::invalid_argument("bad A index");
}

Polynomial hamiltonian_B(int i) {
    switch (i + 1) {
        case 1:  // 8(1+30nu) - 4 om tau1
            return br(30).scaled(Scalar(8)) + tm(-4, 1, 1, 0, 0, 0, 0, 1);
        case 2:  // 12(1+10nu) tau1^5 - 24 om tau2
            return br(10).scaled(Scalar(12)) * tau1_pow(5) + tm(-24, 1, 0, 1, 0, 0, 0, 1);
        case 3:  // 20(1+6nu) tau1^3 tau2 - 40 om tau3
            return br(6).scaled(Scalar(20)) * tm(1, 1, 3, 1, 0, 0) + tm(-40, 1, 0, 0, 1, 0, 0, 1);
        case 4:  // 15(1-30nu) tau1^2 tau2^2 - 450(1+2nu) tau1^4 tau3 - 60 om tau4
            return br(-30).scaled(Scalar(15)) * tm(1, 1, 2, 2, 0, 0) -
                   br(2).scaled(Scalar(450)) * tm(1, 1, 4, 0, 1, 0) + tm(-60, 1, 0, 0, 0, 1, 0, 1);
    }
    throw std::invalid_argument("bad B index");
}

Polynomial integral_F(int i, int j) {
    if (i > j) std::swap(i, j);
    int key = 10 * (i + 1) + (j + 1);
    switch (key) {
        case 11:
        case 12:
        case 13:
        case 14: return Polynomial::zero(Ctx::tau);
        case 22: return tm(-4, 1, 6, 1, 0, 0) + tm(-44, 1, 2, 0, 1, 0) + tm(72, 1, 0, 2, 0, 0);
        case 23:
            return tm(-12, 1, 6, 0, 1, 0) + tm(2, 1, 4, 2, 0, 0) + tm(4, 1, 1, 0, 0, 1) +
                   tm(120, 1, 0, 1, 1, 0);
        case 24:
            return tm(-20, 1, 6, 0, 0, 1) + tm(-30, 1, 5, 1, 1, 0) + tm(-5, 1, 3, 3, 0, 0) +
                   tm(300, 1, 1, 0, 2, 0) + tm(180, 1, 0, 1, 0, 1);
        case 33:
            return tm(4, 3, 5, 0, 0, 1) + tm(-14, 1, 4, 1, 1, 0) + tm(19, 3, 2, 3, 0, 0) +
                   tm(200, 1, 0, 0, 2, 0);
        case 34:
            return tm(90, 1, 5, 0, 2, 0) + tm(-30, 1, 4, 1, 0, 1) + tm(-105, 1, 3, 2, 1, 0) +
                   tm(-15, 1, 1, 4, 0, 0) + tm(300, 1, 0, 0, 1, 1);
        case 44:
            return tm(300, 1, 5, 0, 1, 1) + tm(675, 1, 4, 1, 2, 0) + tm(225, 1, 3, 2, 0, 1) +
                   tm(2175, 2, 2, 3, 1, 0) + tm(450, 1, 0, 0, 0, 2);
    }
    throw std::invalid_argument("bad F index");
}

Polynomial integral_G(int i) {
    switch (i + 1) {
        case 1: return Polynomial::zero(Ctx::tau);
        case 2:  // -6(1+10nu) tau1^6 + 12(7+60nu) tau2
            return br(10).scaled(Scalar(-6)) * tau1_pow(6) +
                   (tm(84, 1, 0, 1, 0, 0) + tm(720, 1, 0, 1, 0, 0, 1));
        case 3:  // -10(1+6nu) tau1^4 tau2 + 20(11+60nu) tau3
            return br(6).scaled(Scalar(-10)) * tm(1, 1, 4, 1, 0, 0) +
                   (tm(220, 1, 0, 0, 1, 0) + tm(1200, 1, 0, 0, 1, 0, 1));
        case 4:  // 225(1+2nu) tau1^5 tau3 - 15/2(1-30nu) tau1^3 tau2^2 + 40(12+45nu) tau4
            return br(2).scaled(Scalar(225)) * tm(1, 1, 5, 0, 1, 0) -
                   br(-30).scaled(Scalar(15, 2)) * tm(1, 1, 3, 2, 0, 0) +
                   (tm(480, 1, 0, 0, 0, 1) + tm(1800, 1, 0, 0, 0, 1, 1));
    }
    throw std::invalid_argument("bad G index");
}

Polynomial boundary_polynomial() {
    struct Row {
        long c;
        int e[4];
    };
    static const Row rows[] = {
        {64, {15, 0, 0, 3}},      {1440, {14, 1, 1, 2}},   {10800, {13, 2, 2, 1}},
        {27000, {12, 3, 3, 0}},   {-240, {12, 3, 0, 2}},   {-3600, {11, 4, 1, 1}},
        {-13500, {10, 5, 2, 0}},  {34992, {10, 0, 5, 0}},  {-1440, {10, 0, 2, 2}},
        {300, {9, 6, 0, 1}},      {-2160, {9, 1, 3, 1}},   {-1440, {9, 1, 0, 3}},
        {2250, {8, 7, 1, 0}},     {-22680, {8, 2, 4, 0}},  {-28080, {8, 2, 1, 2}},
        {-203760, {7, 3, 2, 1}},  {-125, {6, 9, 0, 0}},    {-493020, {6, 4, 3, 0}},
        {3600, {6, 4, 0, 2}},     {57780, {5, 5, 1, 1}},   {-8640, {5, 0, 4, 1}},
        {4320, {5, 0, 1, 3}},     {221310, {4, 6, 2, 0}},  {-648000, {4, 1, 5, 0}},
        {116640, {4, 1, 2, 2}},   {-4680, {3, 7, 0, 1}},   {712800, {3, 2, 3, 1}},
        {6480, {3, 2, 0, 3}},     {-35640, {2, 8, 1, 0}},  {2052000, {2, 3, 4, 0}},
        {62640, {2, 3, 1, 2}},    {259200, {1, 4, 2, 1}},  {1944, {0, 10, 0, 0}},
        {129600, {0, 5, 3, 0}},   {2592, {0, 5, 0, 2}},    {2160000, {0, 0, 6, 0}},
        {-86400, {0, 0, 3, 2}},   {864, {0, 0, 0, 4}},
    };
    Polynomial p(Ctx::tau);
    for (const auto& r : rows)
        p.raw_push(Mono::from_exps({r.e[0], r.e[1], r.e[2], r.e[3], 0, 0}), Scalar(r.c));
    p.normalize();
    return p;
}

Polynomial ground_energy(Ctx ctx) {
    Polynomial p(ctx);
    p.raw_push(Mono::var(kOmega), Scalar(2));
    p.raw_push(Mono::var(kOmega) * Mono::var(kNu), Scalar(60));
    p.normalize();
    return p;
}

Polynomial gamma0(Ctx ctx) {
    Polynomial p(ctx);
    p.raw_push(Mono::var(kNu), Scalar(60));
    p.raw_push(Mono::var(kNu, 2), Scalar(1800));
    p.normalize();
    return p;
}

Polynomial gamma_eigenvalue(int k2, int k3, int k4) {
    long quad = 72l * k2 * k2 + 200l * k3 * k3 + 450l * k4 * k4 + 120l * k2 * k3 +
                180l * k2 * k4 + 300l * k3 * k4;
    long lin = 6l * k2 + 10l * k3 + 15l * k4;
    Polynomial p(Ctx::tau);
    if (quad + 2 * lin) p.raw_push(Mono(), Scalar(quad + 2 * lin));
    if (lin) p.raw_push(Mono::var(kNu), Scalar(120 * lin));
    p.normalize();
    return p;
}

namespace {

Polynomial laguerre_phi(int n) {
    Polynomial alpha(Ctx::tau);
    alpha.raw_push(Mono(), Scalar(1));
    alpha.raw_push(Mono::var(kNu), Scalar(60));
    alpha.normalize();
    Polynomial z(Ctx::tau);
    z.raw_push(Mono::var(kOmega) * Mono::var(0), Scalar(1));
    z.normalize();
    return laguerre(n, alpha, z);
}

Polynomial eps(int n) {
    Polynomial p(Ctx::tau);
    if (n) p.raw_push(Mono::var(kOmega), Scalar(2 * n));
    p.normalize();
    return p;
}

}  // namespace

std::vector<ClosedForm> h_eigenfunctions() {
    std::vector<ClosedForm> out;
    out.push_back({"phi_0,0", Polynomial::constant(Ctx::tau, Scalar(1)), eps(0), std::nullopt});
    out.push_back({"phi_1,0",
                   omega_pow(1) * tau1_pow(1) - br(30).scaled(Scalar(2)), eps(1), std::nullopt});
    out.push_back({"phi_2,0",
                   omega_pow(2) * tau1_pow(2) - omega_pow(1) * br(20).scaled(Scalar(6)) * tau1_pow(1) +
                       (br(20) * br(30)).scaled(Scalar(6)),
                   eps(2), std::nullopt});
    out.push_back({"phi_3,0",
                   omega_pow(3) * tau1_pow(3) -
                       omega_pow(2) * br(15).scaled(Scalar(12)) * tau1_pow(2) +
                       omega_pow(1) * (br(15) * br(20)).scaled(Scalar(36)) * tau1_pow(1) -
                       (br(15) * br(20) * br(30)).scaled(Scalar(24)),
                   eps(3), std::nullopt});
    out.push_back({"phi_4,0", laguerre_phi(4), eps(4), std::nullopt});
    out.push_back({"phi_5,0", laguerre_phi(5), eps(5), std::nullopt});
    // The published level-5 tau2 state; its fourth term is printed with
    // tau1^4 but the eigenvalue recurrence forces tau1^3.
    Polynomial b10 = br(10), b12 = br(12), b15 = br(15), b20 = br(20), b30 = br(30);
    Polynomial phi51 =
        omega_pow(6) * Polynomial::variable(Ctx::tau, 1) -
        omega_pow(5) * b10.scaled(Scalar(3)) * tau1_pow(5) +
        omega_pow(4) * (b10 * b10).scaled(Scalar(45)) * tau1_pow(4) -
        omega_pow(3) * (b12 * b10 * b10).scaled(Scalar(300)) * tau1_pow(3) +
        omega_pow(2) * (b15 * b12 * b10 * b10).scaled(Scalar(900)) * tau1_pow(2) -
        omega_pow(1) * (b20 * b15 * b12 * b10 * b10).scaled(Scalar(1080)) * tau1_pow(1) +
        (b30 * b20 * b15 * b12 * b10 * b10).scaled(Scalar(360));
    out.push_back({"phi_5,1", std::move(phi51), eps(6), std::nullopt});
    return out;
}

std::vector<ClosedForm> joint_eigenfunctions() {
    std::vector<ClosedForm> out;
    for (int n = 0; n <= 6; ++n) {
        ClosedForm cf;
        cf.name = "phi~_" + std::to_string(n) + ",0";
        cf.phi = laguerre_phi(n);
        cf.epsilon = eps(n);
        cf.gamma = Polynomial::zero(Ctx::tau);
        out.push_back(std::move(cf));
    }
    // 4(7+60nu) tau2 - (1+10nu) tau1^6  (stored scaled to clear the fraction)
    ClosedForm cf;
    cf.name = "phi~_6,1";
    Polynomial c7(Ctx::tau);
    c7.raw_push(Mono(), Scalar(28));
    c7.raw_push(Mono::var(kNu), Scalar(240));
    c7.normalize();
    cf.phi = c7 * Polynomial::variable(Ctx::tau, 1) - br(10) * tau1_pow(6);
    cf.epsilon = eps(6);
    cf.gamma = gamma_eigenvalue(1, 0, 0);  // 12(7+60nu)
    out.push_back(std::move(cf));
    return out;
}

std::string tau_text(int component) {
    switch (component) {
        case 2:
            return "14[3^2|0^2] - 6[4|2|0^2] + 2[5|1|0^2] - 270[2^2|1^2] + 30[2^3|0]"
                   " - 12[4|1^2|0] + 348[3|1^3] + 9[3|2|1|0] + 33 sqrt5 Delta4";
        case 3:
            return "2[8|2|0^2] + 4[8|1^2|0] - 10[7|3|0^2] - 45[7|2|1|0] + 60[7|1^3]"
                   " + 22[6|4|0^2] + 157[6|3|1|0] + 270[6|2^2|0] - 150[6|2|1^2]"
                   " - 22[5^2|0^2] - 131[5|4|1|0] - 733[5|3|2|0] - 2156[5|3|1^2]"
                   " + 4050[5|2^2|1] + 1320[4^2|2|0] + 4650[4^2|1^2] + 6[4|3^2|0]"
                   " - 2175[4|3|2|1] - 19050[4|2^3] + 10800[3^2|2^2] + 3336[3^3|1]"
                   " + 3 sqrt5 Delta4 { 5[4|0^3] - 18[3|1|0^2] + 49[2^2|0^2]"
                   " + 3[2|1^2|0] + 1146[1^4] }";
        case 4:
            return "65742[15|0^3] - 504[13|2|0^2] + 830[13|1^2|0] + 61690[12|3|0^2]"
                   " - 5130[12|2|1|0] - 9495[12|1^3] + 18795[11|4|0^2]"
                   " + 28560[11|3|1|0] - 43500[11|2^2|0] - 53070[11|2|1^2]"
                   " - 156330[10|5|0^2] + 59130[10|4|1|0] + 26415[10|3|2|0]"
                   " + 405255[10|3|1^2] + 1350[10|2^2|1] + 19710[9|6|0^2]"
                   " - 20[9|4|2|0] - 8663355[9|4|1^2] - 120[9|3^2|0] + 450[9|3|2|1]"
                   " - 962715[9|2^3] + 13860[8|7|0^2] - 94530[8|6|1|0]"
                   " - 353160[8|5|2|0] - 1452060[8|5|1^2] + 5557050[8|4|3|0]"
                   " + 590580[8|4|2|1] - 198270[8|3^2|1] + 389250[7^2|1|0]"
                   " + 2897820[7|6|2|0] - 5227920[7|6|1^2] + 1134540[7|5|3|0]"
                   " - 4041270[7|5|2|1] - 591330[7|4^2|0] + 23417850[7|4|3|1]"
                   " - 22770[7|4|2^2] - 23528790[7|3^2|2] + 29647380[6^2|3|0]"
                   " + 36597510[6^2|2|1] - 1649925[6|5|4|0] + 150[6|5|3|1]"
                   " + 40935[6|5|2^2] - 510[6|4^2|1] - 60[6|4|3|2] + 242505[6|3^3]"
                   " + 270060[5^3|0] - 528270[5^2|4|1] - 36255[5|4^2|2] + 825[5|4|3^2]"
                   " + 707085[4^3|3] + 45 sqrt5 Delta4 { -27040[9|0^3] - 5[8|1|0^2]"
                   " - 1914[7|1^2|0] + 23[6|3|0^2] + 91[6|2|1|0] - 44[6|1^3]"
                   " - 352[5|4|0^2] + 8[5|3|1|0] + 1085[5|2^2|0] + 6875[5|2|1^2]"
                   " - 5168[4^2|1|0] - 934[4|3|2|0] - 568[4|3|1^2] + 1773[4|2^2|1]"
                   " + 20911[3^3|0] + 15915[3^2|2|1] + 573[3|2^3] }";
    }
    throw std::invalid_argument("bad tau component");
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip();
        std::size_t n = std::string(w).size();
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected integer at " + s.substr(start, 12));
        return std::stol(s.substr(start, i - start));
    }
    bool done() {
        skip();
        return i >= s.size();
    }
};

Partition parse_partition(Scanner& sc) {
    Partition p{0, 0, 0, 0};
    int n = 0;
    if (!sc.eat('[')) throw std::invalid_argument("expected [");
    while (true) {
        long part = sc.integer();
        long rep = 1;
        if (sc.eat('^')) rep = sc.integer();
        for (long r = 0; r < rep; ++r) {
            if (n >= 4) throw std::invalid_argument("partition too long");
            p[n++] = static_cast<int>(part);
        }
        if (sc.eat(']')) break;
        if (!sc.eat('|')) throw std::invalid_argument("expected | or ]");
    }
    return p;
}

// sum of signed bracket terms until the end or a closing brace
Polynomial parse_sum(Scanner& sc, bool in_brace);

Polynomial parse_term(Scanner& sc, long sign) {
    long coeff = sc.integer();
    Polynomial factor = Polynomial::constant(Ctx::cart, Scalar(sign * coeff));
    while (true) {
        sc.skip();
        if (sc.i < sc.s.size() && sc.s[sc.i] == '[') {
            factor = factor * monomial_symmetric(parse_partition(sc));
        } else if (sc.eat_word("sqrt5")) {
            factor = factor.scaled(Scalar::sqrt5());
        } else if (sc.eat_word("Delta4")) {
            factor = factor * alternating_delta4();
        } else if (sc.eat('{')) {
            factor = factor * parse_sum(sc, true);
            if (!sc.eat('}')) throw std::invalid_argument("expected }");
        } else {
            break;
        }
    }
    return factor;
}

Polynomial parse_sum(Scanner& sc, bool in_brace) {
    Polynomial acc(Ctx::cart);
    long sign = 1;
    if (sc.eat('-')) sign = -1;
    else sc.eat('+');
    acc += parse_term(sc, sign);
    while (true) {
        sc.skip();
        if (sc.done()) break;
        if (in_brace && sc.i < sc.s.size() && sc.s[sc.i] == '}') break;
        if (sc.eat('+')) sign = 1;
        else if (sc.eat('-')) sign = -1;
        else throw std::invalid_argument("expected + or - at " + sc.s.substr(sc.i, 12));
        acc += parse_term(sc, sign);
    }
    return acc;
}

}  // namespace

Polynomial parse_bracket_text(const std::string& text) {
    Scanner sc{text};
    Polynomial p = parse_sum(sc, false);
    if (!sc.done()) throw std::invalid_argument("trailing input in bracket text");
    return p;
}

}  // namespace coxh4::reference
