import numpy as np

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from gf.fields import (
    FieldElement,
    FieldSpec,
    as_subfield_vector,
    element_order_key,
    frobenius,
    make_field,
)
from gf.rest.serializers import FieldSpecSerializer


class MakeFieldTestCase(SimpleTestCase):
    def test_prime_field(self):
        spec = make_field(2, 1)
        self.assertEqual((spec.p, spec.e, spec.order), (2, 1, 2))
        self.assertEqual(spec.modulus, (0, 1))

    def test_gf4_has_the_only_irreducible_quadratic(self):
        self.assertEqual(make_field(2, 2).modulus, (1, 1, 1))

    def test_cubic_modulus_has_no_root(self):
        spec = make_field(37, 3)
        self.assertEqual(len(spec.modulus), 4)
        self.assertEqual(spec.modulus[-1], 1)
        for x in range(37):
            value = sum(c * pow(x, i, 37) for i, c in enumerate(spec.modulus)) % 37
            self.assertNotEqual(value, 0)

    def test_deterministic(self):
        self.assertEqual(make_field(5, 3), make_field(5, 3))
        self.assertEqual(make_field(5, 3).identifier, make_field(5, 3).identifier)

    def test_errors(self):
        with self.assertRaises(ValidationError):
            make_field(4, 1)
        with self.assertRaises(ValidationError):
            make_field(3, 0)

    def test_reducible_modulus_rejected(self):
        with self.assertRaises(ValidationError):
            FieldSpec(2, 2, (1, 0, 1))


class ArithmeticTestCase(SimpleTestCase):
    def setUp(self):
        self.gf4 = make_field(2, 2)
        self.alpha = self.gf4.element((0, 1))

    def test_characteristic_two(self):
        one = make_field(2).one()
        self.assertFalse(one + one)

    def test_reduction(self):
        self.assertEqual(self.alpha * self.alpha, self.gf4.element((1, 1)))

    def test_inverse_mod_37(self):
        gf37 = make_field(37)
        self.assertEqual(gf37.element(2).inverse(), gf37.element(19))
        with self.assertRaises(ZeroDivisionError):
            gf37.zero().inverse()

    def test_mismatched_specs(self):
        with self.assertRaises(ValidationError):
            make_field(3).one() + make_field(5).one()

    def test_field_axioms_on_random_elements(self):
        spec = make_field(5, 3)
        rng = np.random.default_rng(7)
        for _ in range(50):
            x, y = (spec.element(int(v)) for v in rng.integers(1, spec.order, size=2))
            self.assertEqual(x.inverse() * x, spec.one())
            self.assertEqual(x ** (spec.order - 1), spec.one())
            self.assertEqual((x + y) ** spec.p, x**spec.p + y**spec.p)
            self.assertEqual(frobenius(x * y, 5), frobenius(x, 5) * frobenius(y, 5))
            self.assertEqual((x - y) + y, x)


class FrobeniusTestCase(SimpleTestCase):
    def test_one_is_fixed(self):
        spec = make_field(37, 3)
        self.assertEqual(frobenius(spec.one(), 37), spec.one())

    def test_gf4(self):
        gf4 = make_field(2, 2)
        self.assertEqual(frobenius(gf4.element((0, 1)), 2), gf4.element((1, 1)))

    def test_order_of_the_galois_group(self):
        spec = make_field(37, 3)
        x = spec.element((5, 3, 1))
        self.assertEqual(frobenius(frobenius(frobenius(x, 37), 37), 37), x)
        self.assertNotEqual(frobenius(x, 37), x)

    def test_not_a_power_of_p(self):
        with self.assertRaises(ValidationError):
            frobenius(make_field(3, 2).one(), 6)


class SubfieldVectorTestCase(SimpleTestCase):
    def setUp(self):
        self.spec = make_field(37, 3)

    def test_coordinates(self):
        self.assertEqual(as_subfield_vector(self.spec.zero(), 37).tolist(), [0, 0, 0])
        self.assertEqual(as_subfield_vector(self.spec.element((5, 0, 1)), 37).tolist(), [5, 0, 1])

    def test_linearity(self):
        x, y = self.spec.element((5, 9, 1)), self.spec.element((36, 2, 0))
        self.assertEqual(
            as_subfield_vector(x + y, 37).tolist(),
            (as_subfield_vector(x, 37) + as_subfield_vector(y, 37)).tolist(),
        )

    def test_only_prime_subfield(self):
        with self.assertRaises(ValidationError):
            as_subfield_vector(self.spec.one(), 37**3)


class OrderKeyTestCase(SimpleTestCase):
    def test_gf4_order(self):
        gf4 = make_field(2, 2)
        elements = [gf4.element(v) for v in [(1, 1), (0, 1), (1, 0), (0, 0)]]
        ordered = sorted(elements, key=element_order_key)
        self.assertEqual([e.coeffs for e in ordered], [(0, 0), (1, 0), (0, 1), (1, 1)])
        self.assertEqual(sorted(ordered, key=element_order_key), ordered)

    def test_integer_form_round_trip(self):
        spec = make_field(3, 2)
        self.assertEqual([x.value for x in spec.elements()], list(range(9)))
        self.assertIsInstance(spec.element(4), FieldElement)


class FieldSpecSerializerTestCase(SimpleTestCase):
    def test_valid(self):
        serializer = FieldSpecSerializer(data={"p": 2, "e": 2, "modulus": [1, 1, 1]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), make_field(2, 2))

    def test_reducible(self):
        serializer = FieldSpecSerializer(data={"p": 2, "e": 2, "modulus": [1, 0, 1]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("modulus", serializer.errors)

    def test_representation(self):
        self.assertEqual(
            FieldSpecSerializer(make_field(2, 2)).data, {"p": 2, "e": 2, "modulus": [1, 1, 1]}
        )
