#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covseg/segment.hpp"

namespace covseg {

/* A session is one cover plus named cuspidal data and named multisegments,
   as written in the input language:

       cover KP n=2 a=0          # or: cover S n=3
       cuspidal rho1 r0=1 l=1
       m M1 = [0,2]_rho1 + [0,0]_rho1

   Whitespace is insignificant, '#' starts a comment. Declarations keep
   their order; multisegments are stored in normal order. */

struct Session {
    CoverSpec cover;
    std::vector<std::pair<std::string, CuspidalDatum>> cuspidals;
    std::vector<std::pair<std::string, Multisegment>> multisegments;

    const CuspidalDatum* find_cuspidal(const std::string& id) const;
    const Multisegment* find_multisegment(const std::string& name) const;

    bool operator==(const Session& o) const;
};

/* Throws ParseError with line/column on malformed input, unknown or
   duplicate names, and inadmissible cuspidal data. */
Session parse_session(const std::string& text);

/* Canonical text form; parse_session(print_session(s)) == s. */
std::string print_session(const Session& s);

} // namespace covseg
