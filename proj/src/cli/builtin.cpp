#include "otcert/cli.hpp"

namespace otcert::cli {

namespace {

struct Builtin {
    const char* name;
    const char* summary;
    const char* text;
};

const Builtin kBuiltins[] = {
    {"inoue", "X^3 - 2 with the unit theta - 1 (s = t = 1)",
     "# Inoue surface: one real and one complex place.\n"
     "name = inoue\n"
     "polynomial = [-2, 0, 0, 1]\n"
     "# theta - 1\n"
     "unit = [-1, 1, 0]\n"},
    {"ot6", "X^6 - 2 with u1 = theta^2 - 1 and u2 = (theta - 1)^2 (s = t = 2)",
     "# Degree 6 datum containing the Inoue surface of X^3 - 2 via theta -> theta^2.\n"
     "name = ot6\n"
     "polynomial = [-2, 0, 0, 0, 0, 0, 1]\n"
     "# theta^2 - 1, the image of theta - 1\n"
     "unit = [-1, 0, 1, 0, 0, 0]\n"
     "# (theta - 1)^2\n"
     "unit = [1, -2, 1, 0, 0, 0]\n"
     "# place 1 is the positive real root; complex place 2 is conjugated so that\n"
     "# both complex places restrict to the same place of the cubic subfield\n"
     "real_order = [1, 0]\n"
     "conjugate = [0, 1]\n"},
};

}  // namespace

std::vector<std::string> builtin_example_names() {
    std::vector<std::string> out;
    for (const auto& b : kBuiltins) out.emplace_back(b.name);
    return out;
}

std::string builtin_example_summary(std::string_view name) {
    for (const auto& b : kBuiltins)
        if (name == b.name) return b.summary;
    return {};
}

std::optional<JobSpec> builtin_example(std::string_view name) {
    for (const auto& b : kBuiltins)
        if (name == b.name) return parse_jobspec(b.text);
    return std::nullopt;
}

}  // namespace otcert::cli
