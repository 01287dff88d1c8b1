#include "egyptian/result_record.hpp"

namespace egyptian {

ResultRecord::ResultRecord(std::string_view command) {
    fields_.emplace_back("command", std::string(command));
}

void ResultRecord::field(std::string_view key, std::string_view value) {
    fields_.emplace_back(std::string(key), std::string(value));
}

std::string ResultRecord::render() const {
    std::string out = "record egyptian/1\n";
    for (const auto& [k, v] : fields_) {
        out += k;
        out += ' ';
        out += v;
        out += '\n';
    }
    out += "end\n";
    return out;
}

std::string format_term(const Term& t) {
    return "(" + rat_format(t.a) + " " + rat_format(t.b) + ")";
}

std::string format_representation(const Representation& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ' ';
        out += format_term(r[i]);
    }
    return out;
}

std::string format_signed_term(const SignedTerm& t) {
    return "(" + rat_format(t.a) + " " + rat_format(t.b) + (t.epsilon > 0 ? " +)" : " -)");
}

std::string format_signed_representation(const SignedRepresentation& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ' ';
        out += format_signed_term(r[i]);
    }
    return out;
}

}  // namespace egyptian
