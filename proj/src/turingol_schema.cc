#include "turingol/schema.h"

namespace turingol {

namespace {

RegexSpec lit(const char* w) { return RegexSpec::literal(Word(w)); }

Schema build_turingol_schema() {
  const RegexSpec empty = lit("");
  const RegexSpec word = RegexSpec::lower_word();
  Schema s;
  // Nodes in the order of the final grammar listing; numbering gives the
  // position of the node's own word among its production items.
  s.add_node("I", word, 1)
      .add_node("OS", lit("one-square"), 1)
      .add_node("DOT", lit("."), 1)
      .add_node("LD", word, 1)
      .add_node("DL", word, 1)
      .add_node("STR", lit("'"), 1)
      .add_node("A", lit("the-tape-symbol"), 1)
      .add_node("SG", lit("go"), 1)
      .add_node("SI", lit("if"), 1)
      .add_node("SP", lit("print"), 1)
      .add_node("SM", lit("move"), 1)
      .add_node("SE", empty, 1)
      .add_node("SC", lit("{"), 1)
      .add_node("S", empty, 2)
      .add_node("L", empty, 1)
      .add_node("P", lit("tape-alphabet"), 1);

  s.add_and("LD", lit(":"), "LD", true, 2)
      .add_and("DL", lit(","), "DL", true, 2)
      .add_and("STR", lit("'"), "I", false, 2, /*suffix=*/true)
      .add_and("A", lit("is"), "STR", false, 2)
      .add_and("SG", lit("to"), "I", false, 2)
      .add_and("SI", empty, "A", false, 2)
      .add_and("SI", lit("then"), "S", false, 3)
      .add_and("SP", empty, "STR", false, 2)
      .add_and("SM", RegexSpec::alternation({Word("left"), Word("right")}), "OS", false, 2)
      .add_and("SC", lit("}"), "L", false, 2, /*suffix=*/true)
      .add_and("S", lit(":"), "LD", true, 1, /*suffix=*/true)
      .add_and("L", lit(";"), "L", true, 2)
      .add_and("P", lit("is"), "DL", false, 2)
      .add_and("P", lit(";"), "L", false, 3)
      .add_and("P", empty, "DOT", false, 4);

  for (const char* statement : {"SG", "SI", "SP", "SM", "SE", "SC"}) s.add_or("S", statement);
  s.add_or("L", "S");
  return s;
}

}  // namespace

const Schema& turingol_schema() {
  static const Schema schema = build_turingol_schema();
  return schema;
}

}  // namespace turingol
