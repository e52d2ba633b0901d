#include "orbitforge/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitforge {

std::string Presentation::alphabet() const {
    std::string a;
    for (int i = 0; i < num_gens; ++i) a.push_back(static_cast<char>('a' + i));
    return a;
}

Presentation Presentation::parse(const std::string& text) {
    Presentation p;
    bool saw_gens = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;  // blank or comment-only

        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("presentation line " + std::to_string(lineno) + ": " +
                                        why);
        };
        auto rest_word = [&]() {
            std::string w;
            if (!(ls >> w)) fail("missing word");
            std::string extra;
            if (ls >> extra) fail("trailing input after word");
            if (!saw_gens) fail("word before gens line");
            try {
                return Word::parse(p.alphabet(), w);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            return Word{};  // unreachable
        };

        if (key == "gens") {
            if (saw_gens) fail("duplicate gens line");
            long n = 0;
            if (!(ls >> n)) fail("gens needs a count");
            std::string extra;
            if (ls >> extra) fail("trailing input after count");
            if (n < 1 || n > 26) fail("generator count must be in 1..26");
            p.num_gens = static_cast<int>(n);
            saw_gens = true;
        } else if (key == "rel") {
            Word w = rest_word();
            if (w.empty()) fail("empty relator");
            p.relators.push_back(std::move(w));
        } else if (key == "central") {
            Word w = rest_word();
            if (w.empty()) fail("empty central word");
            p.central_words.push_back(std::move(w));
        } else if (key == "nilpotent") {
            std::string extra;
            if (ls >> extra) fail("trailing input after nilpotent");
            p.nilpotent = true;
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (!saw_gens) throw std::invalid_argument("presentation: missing gens line");
    return p;
}

std::string Presentation::format() const {
    std::ostringstream out;
    out << "gens " << num_gens << "\n";
    for (const Word& w : relators) out << "rel " << w.format(alphabet()) << "\n";
    for (const Word& w : central_words) out << "central " << w.format(alphabet()) << "\n";
    if (nilpotent) out << "nilpotent\n";
    return out.str();
}

}  // namespace orbitforge
