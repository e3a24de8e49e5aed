// Builds the poset for given margins and prints it level by level, with the
// move realizing each cover and the full-flag dimension where defined.
//   poset_demo 1,1,1 1,1,1
#include <triflag/triflag.hpp>

#include <iostream>
#include <sstream>

using namespace triflag;

static Composition parse(const char* s) {
    Composition parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) parts.push_back(std::stoi(tok));
    return parts;
}

int main(int argc, char** argv) {
    const Composition b = argc > 1 ? parse(argv[1]) : ones(3);
    const Composition c = argc > 2 ? parse(argv[2]) : ones(3);
    const Poset P = build_poset(b, c);
    const int n = static_cast<int>(P.elements.size());
    const auto h = heights(n, P.edge_list());
    const int top = n ? *std::max_element(h.begin(), h.end()) : 0;
    const bool full = is_full_flag(P.elements.front().matrix);

    for (int level = 0; level <= top; ++level) {
        std::cout << "level " << level << "\n";
        for (int k = 0; k < n; ++k) {
            if (h[k] != level) continue;
            std::cout << "  [" << k << "] " << show(P.elements[k]);
            if (full) std::cout << "   dim " << dimension_full_flags(P.elements[k]);
            std::cout << "\n";
            for (const auto& e : P.covers)
                if (e.from == k) std::cout << "        " << show(e.move) << " -> [" << e.to << "]\n";
        }
    }
    std::cout << n << " elements, " << P.covers.size() << " covers\n";
}
