#include "psrep/catalog.hpp"

#include <numeric>

#include "psrep/errors.hpp"

namespace psrep {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::QuaternionicGeneric: return "QuaternionicGeneric";
        case CaseTag::QuaternionicSO4d: return "QuaternionicSO4d";
        case CaseTag::SplitExceptional: return "SplitExceptional";
    }
    return "?";
}

namespace {

AlgebraData make_quaternionic(const std::string& name, long long a) {
    AlgebraData alg;
    alg.name = name;
    alg.case_tag = CaseTag::QuaternionicGeneric;
    alg.a = a;
    alg.rho = {1, 1 + 2 * a, 1 + a, 1};
    alg.d = alg.rho[0] + alg.rho[1] + alg.rho[2] + alg.rho[3];
    alg.rho_g = 1 + alg.d;
    return alg;
}

AlgebraData make_split(const std::string& name, long long a) {
    AlgebraData alg;
    alg.name = name;
    alg.case_tag = CaseTag::SplitExceptional;
    alg.a = a;
    alg.rho = {1 + 3 * a, 1 + 2 * a, 1 + a, 1};
    alg.d = alg.rho[0] + alg.rho[1] + alg.rho[2] + alg.rho[3];
    alg.rho_g = 1 + alg.d;
    return alg;
}

}  // namespace

AlgebraData lookup_so4d(long long d) {
    if (d < 4) throw InvalidParameter("so4d requires d >= 4, got d=" + std::to_string(d));
    AlgebraData alg;
    alg.name = "so4d(" + std::to_string(d) + ")";
    alg.case_tag = CaseTag::QuaternionicSO4d;
    alg.a = d - 4;
    alg.d = d;
    alg.rho = {1, 1, d - 3, 1};
    alg.rho_g = 1 + d;
    return alg;
}

AlgebraData lookup(const std::string& name) {
    if (name == "e6_2") return make_quaternionic("e6_2", 2);
    if (name == "e7_m5") return make_quaternionic("e7_m5", 4);
    if (name == "e8_m24") return make_quaternionic("e8_m24", 8);
    if (name == "f4_4") return make_quaternionic("f4_4", 1);
    if (name == "e6_6") return make_split("e6_6", 1);
    if (name == "e7_7") return make_split("e7_7", 2);
    if (name == "e8_8") return make_split("e8_8", 4);
    if (name.rfind("so4d", 0) == 0) {
        std::string rest = name.substr(4);
        if (!rest.empty() && (rest.front() == '(' || rest.front() == ':')) {
            if (rest.front() == '(') {
                if (rest.back() != ')') throw NotInCatalog(name);
                rest = rest.substr(1, rest.size() - 2);
            } else {
                rest = rest.substr(1);
            }
            try {
                return lookup_so4d(std::stoll(rest));
            } catch (const std::invalid_argument&) {
                throw NotInCatalog(name);
            } catch (const std::out_of_range&) {
                throw NotInCatalog(name);
            }
        }
        if (rest.empty())
            throw InvalidParameter("so4d needs a parameter d, e.g. so4d(5)");
    }
    throw NotInCatalog(name);
}

std::vector<AlgebraData> named_catalog() {
    return {
        lookup("so4d(4)"), lookup("e6_2"), lookup("e7_m5"), lookup("e8_m24"),
        lookup("f4_4"),    lookup("e6_6"), lookup("e7_7"),  lookup("e8_8"),
    };
}

std::vector<CatalogCheck> validate_catalog() {
    std::vector<CatalogCheck> out;
    auto check = [&out](const AlgebraData& alg) {
        long long sum = alg.rho[0] + alg.rho[1] + alg.rho[2] + alg.rho[3];
        out.push_back({alg.name + ": sum(rho) = d", sum == alg.d});
        out.push_back({alg.name + ": rho_g = 1 + d", alg.rho_g == 1 + alg.d});
    };
    for (const auto& alg : named_catalog())
        if (alg.case_tag != CaseTag::QuaternionicSO4d) check(alg);
    for (long long d = 4; d <= 40; ++d) check(lookup_so4d(d));
    return out;
}

}  // namespace psrep
