import unittest

from toruslab import errors


class TestErrors(unittest.TestCase):

    def test_exit_codes(self):
        self.assertEqual(errors.ParseError('x').exit_code, 1)
        self.assertEqual(errors.ConfigError('x').exit_code, 1)
        self.assertEqual(errors.PrecisionExhausted('x').exit_code, 2)
        self.assertEqual(errors.BudgetExhausted('x').exit_code, 2)
        self.assertEqual(errors.Incompatible([]).exit_code, 3)

    def test_still_value_errors(self):
        with self.assertRaises(ValueError):
            raise errors.InvalidCoefficient('sqrt of a square')

    def test_to_dict(self):
        e = errors.ParseError('unexpected character', 4)
        self.assertEqual(e.to_dict(), {
            'type': 'ParseError',
            'message': 'unexpected character (at position 4)',
            'position': 4})

        e = errors.PrecisionExhausted('undecided', (3, -1))
        self.assertEqual(e.to_dict()['frequency'], [3, -1])
        self.assertNotIn(
            'frequency', errors.PrecisionExhausted('undecided').to_dict())

        e = errors.BudgetExhausted('ran out', 12, [(1, 0)])
        self.assertEqual(e.to_dict()['largest_radius'], 12)
        self.assertEqual(e.to_dict()['found'], [[1, 0]])

        e = errors.Incompatible([(3, 2), (-3, -2)])
        self.assertEqual(e.to_dict()['violations'], [[3, 2], [-3, -2]])
        self.assertIn('2 zero(s)', e.message)
        self.assertTrue(e.message.endswith('[3, 2] [-3, -2]'))
