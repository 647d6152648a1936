#!/usr/bin/env python3

import json
import unittest
from collections import namedtuple

from sapphire.cohomology.coefficients import module_trivial_Z, module_Zp
from sapphire.cohomology.group import GroupParams
from sapphire.cohomology.homology import cohomology, homology
from sapphire.cohomology.products import ProductEntry, ProductTable
from sapphire.cohomology.report import (ReportView, GROUP_VIEW, group_records, compute_text,
                                        compute_document, products_text, products_document,
                                        verify_text, verify_document)
from sapphire.cohomology.resolution import Resolution
from sapphire.cohomology.verify import CheckResult

Inner = namedtuple("Inner", ["value"])
Outer = namedtuple("Outer", ["name", "inner"])


class ReportViewTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.recs = [Outer("a", Inner(1)), Outer("long name", Inner(22))]

    def test_columns(self):
        view = ReportView(["name", "inner.value"], headings={"inner.value": "value"})
        self.assertListEqual(["name", "inner.value"], view.columns)
        self.assertListEqual([("name", "value")], list(view.header))
        self.assertListEqual([("a", "1"), ("long name", "22")], list(view.rows(self.recs)))

    def test_alignment(self):
        view = ReportView(["name", "inner.value"], headings={"inner.value": "value"})
        self.assertEqual("name       value\n"
                         "a          1\n"
                         "long name  22", view(self.recs))

    def test_no_headings(self):
        view = ReportView(["name"], headings={"name": None}, separator=" | ")
        self.assertListEqual([], list(view.header))
        self.assertEqual("a\nlong name", view(self.recs))
        self.assertEqual("", view([]))

    def test_formatter(self):
        view = ReportView(["inner.value"], headings={"inner.value": ""},
                          fmt={"inner.value": lambda v: f"<{v}>"})
        self.assertEqual("<1>\n<22>", view(self.recs))

    def test_getattr(self):
        self.assertEqual(22, ReportView._getattr(self.recs[1], ["inner", "value"]))
        self.assertIsNone(ReportView._getattr(Outer("x", None), ["inner", "value"]))
        self.assertEqual("-", ReportView._getattr(self.recs[0], ["missing"], "-"))

        with self.assertRaises(AttributeError):
            ReportView._getattr(self.recs[0], ["missing"])

    def test_nested_columns(self):
        view = ReportView(["name", "inner.value"], headings={"name": ""})
        self.assertListEqual([("", "inner.value")], list(view.header))
        rows = list(view.rows([Outer("x", None)] + self.recs))
        self.assertListEqual([("x", "None"), ("a", "1"), ("long name", "22")], rows)
        self.assertListEqual(["module.label", "kind", "degree", "invariants", "generators"],
                             GROUP_VIEW.columns)


class DocumentTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.params = GroupParams(1, 2, -1, -1)
        res = Resolution(cls.params)
        cls.groups = cohomology(res, module_trivial_Z()) + homology(res, module_trivial_Z())

    def test_records(self):
        records = group_records(self.groups)
        self.assertEqual(8, len(records))
        self.assertEqual(("H^", 2), (records[2].kind, records[2].degree))
        self.assertEqual(("H_", 1), (records[5].kind, records[5].degree))
        self.assertEqual(3, len(records[2].generators))
        self.assertListEqual([], records[1].generators)

    def test_compute_text(self):
        text = compute_text(self.params, self.groups)
        lines = text.splitlines()
        self.assertEqual("params (1,2,-1,-1)", lines[0])
        self.assertTrue(lines[1].startswith("coefficients"))
        self.assertTrue(all(line.startswith("Z ") for line in lines[2:]))
        self.assertIn("Z_2 + Z_2 + Z_4", text)
        self.assertEqual(10, len(lines))

    def test_compute_document(self):
        document = compute_document(self.params, self.groups)
        self.assertListEqual([1, 2, -1, -1], document["params"])
        h2 = document["results"][2]
        self.assertEqual("cohomology", h2["kind"])
        self.assertEqual("Z", h2["coefficients"])
        self.assertDictEqual({"free_rank": 0, "torsion": [2, 2, 4]}, h2["group"])
        self.assertEqual("homology", document["results"][4]["kind"])
        self.assertEqual(document, json.loads(json.dumps(document)))

    def test_products(self):
        entries = [ProductEntry((1, 1), "H1:0", "H1:0", (0, 1)),
                   ProductEntry((1, 2), "H1:0", "H2:0", (0,))]
        table = ProductTable(self.params, module_Zp(5), module_Zp(5), entries)
        text = products_text(table, [])
        self.assertEqual("params (1,2,-1,-1)  Zp:5 x Zp:5", text.splitlines()[0])
        self.assertIn("(1,1)", text)
        self.assertIn("(0, 1)", text)
        document = products_document(table)
        self.assertEqual("Zp:5", document["results"]["left"])
        self.assertListEqual([e.as_dict() for e in entries], document["results"]["products"])

        empty = ProductTable(self.params, module_trivial_Z(), module_trivial_Z(), [])
        self.assertTrue(products_text(empty, []).endswith("no products"))
        self.assertListEqual([], products_document(empty)["results"]["products"])

    def test_verify(self):
        results = [CheckResult("group-law", (1, 2, -1, -1), True, "10 triples"),
                   CheckResult("torsion-oracle", None, False, "mod 2")]
        text = verify_text(results)
        self.assertEqual("1 passed, 1 failed", text.splitlines()[-1])
        self.assertIn("FAIL", text)
        self.assertIn("(1,2,-1,-1)", text)
        document = verify_document(results)
        self.assertIsNone(document["params"])
        self.assertEqual(2, len(document["results"]))


def suite():
    """Get Test suite object
    """
    loader = unittest.TestLoader()
    return unittest.TestSuite([loader.loadTestsFromTestCase(case)
                               for case in (ReportViewTestCase, DocumentTestCase)])


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
