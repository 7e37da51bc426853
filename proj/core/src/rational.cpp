#include "qvakit/rational.hpp"

namespace qvakit {

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    Rat q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational: " + s);
    if (sgn(q.get_den()) == 0) throw parse_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

} // namespace qvakit
