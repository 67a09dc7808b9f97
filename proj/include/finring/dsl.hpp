/*
   Copyright 2026 the finring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FINRING_DSL_HPP
#define FINRING_DSL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "finring/ring.hpp"

namespace finring::dsl {

// Grammar (case-sensitive, whitespace-insensitive, decimal unsigned ints):
//   expr := "Z(" int ")"
//         | "Prod(" expr ("," expr)+ ")"
//         | "Mat(" expr "," int ")"
//         | "UT(" expr "," int ")"
//         | "Tnk(" expr "," int "," int ")"
//         | "Triv(" expr ")"
//         | "PolyMod(" expr "," int ")"

enum class ExprKind { zn, prod, mat, ut, tnk, triv, polymod };

struct Span {
    int line = 1;
    int col = 1;
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct RingExpr {
    ExprKind kind = ExprKind::zn;
    std::vector<std::uint32_t> params;  // zn:{n} mat/ut:{n} tnk:{n,k} polymod:{n}
    std::vector<RingExpr> children;
    Span span;
};

/// Structural equality, spans ignored.
bool same_tree(const RingExpr& a, const RingExpr& b);

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line, int col, std::vector<std::string> expected)
        : Error(msg), line(line), col(col), expected(std::move(expected)) {}
    int line;
    int col;
    std::vector<std::string> expected;
};

RingExpr parse(std::string_view input);  // throws ParseError

/// Canonical text: one space after each comma, no other whitespace.
/// parse(pretty(e)) is structurally identical to e.
std::string pretty(const RingExpr& e);

/// Builds the ring bottom-up. InvalidParameter / OrderOverflow from the
/// builders are re-thrown with the offending node's position attached.
RingPtr elaborate(const RingExpr& e, const Caps& caps = {});

/// parse + elaborate.
RingPtr eval_expr(std::string_view input, const Caps& caps = {});

}  // namespace finring::dsl

#endif  // FINRING_DSL_HPP
