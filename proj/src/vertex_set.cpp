#include "accdom/vertex_set.hpp"

#include <sstream>

namespace accdom {

std::string VertexSet::to_string(int base) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for_each_vertex(*this, [&](int v) {
        if (!first) out << ',';
        first = false;
        out << v + base;
    });
    out << '}';
    return out.str();
}

}  // namespace accdom
