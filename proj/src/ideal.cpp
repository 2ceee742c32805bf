#include "newt/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "newt/errors.hpp"

namespace newt {

IdealGens::IdealGens(std::vector<BPoly> raw) {
    for (auto& g : raw)
        if (!g.is_zero()) gens_.push_back(g);
    if (gens_.empty()) throw error("ideal needs at least one nonzero generator");
    a_ = gens_.front().x_content();
    b_ = gens_.front().y_content();
    for (auto& g : gens_) {
        a_ = std::min(a_, g.x_content());
        b_ = std::min(b_, g.y_content());
    }
    if (a_ || b_)
        for (auto& g : gens_) g = g.unshift(a_, b_);
}

std::vector<BPoly> IdealGens::full_gens() const {
    std::vector<BPoly> out;
    out.reserve(gens_.size());
    for (auto& g : gens_) out.push_back(g.shift(a_, b_));
    return out;
}

bool IdealGens::any_unit_generator() const {
    for (auto& g : gens_)
        if (g.is_local_unit()) return true;
    return false;
}

IdealGens IdealGens::parse(const std::string& text) {
    std::vector<BPoly> gens;
    std::string cur;
    auto flush = [&](std::size_t at) {
        bool blank = cur.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) {
            try {
                gens.push_back(parse_poly(cur));
            } catch (const syntax_error& e) {
                throw syntax_error("in generator: " + std::string(e.what()), at);
            }
        }
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ';' || c == '\n') {
            flush(i);
        } else {
            cur += c;
        }
    }
    flush(text.size());
    return IdealGens(std::move(gens));
}

IdealGens IdealGens::parse_file_text(const std::string& text) {
    std::ostringstream cleaned;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        cleaned << line << '\n';
    }
    return parse(cleaned.str());
}

std::string IdealGens::to_string() const {
    std::string out = "(";
    auto fg = full_gens();
    for (std::size_t i = 0; i < fg.size(); ++i) {
        if (i) out += ", ";
        out += fg[i].to_string();
    }
    return out + ")";
}

} // namespace newt
