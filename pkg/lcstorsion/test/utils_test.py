from .. import utils
import threading
import unittest


class TestPermutationSign(unittest.TestCase):

    def test_sign(self):
        self.assertEqual(utils.permutation_sign(()), 1)
        self.assertEqual(utils.permutation_sign((1, 2, 3)), 1)
        self.assertEqual(utils.permutation_sign((2, 1, 3)), -1)
        self.assertEqual(utils.permutation_sign((2, 3, 1)), 1)
        self.assertEqual(utils.permutation_sign((5, 4, 3, 2, 1)), 1)
        self.assertEqual(utils.permutation_sign((1, 2, 3, 6)), 1)
        self.assertEqual(utils.permutation_sign((6, 2, 3, 1)), -1)

    def test_repeated(self):
        self.assertRaises(ValueError, utils.permutation_sign, (1, 1))


class TestWorkerPool(unittest.TestCase):

    def test_inline(self):
        with utils.WorkerPool(1) as pool:
            self.assertEqual(pool.threads, [])
            task = pool.schedule(lambda x: x * 2, 21)
            self.assertTrue(task.done.is_set())
            self.assertEqual(task.result, 42)

    def test_map_ordered(self):
        names = set()

        def square(x):
            names.add(threading.current_thread().name)
            return x * x

        with utils.WorkerPool(4) as pool:
            results = pool.map_ordered(square, range(50))
        self.assertEqual([r for r, _ in results], [x * x for x in range(50)])
        self.assertTrue(all(e is None for _, e in results))
        self.assertNotIn(threading.current_thread().name, names)

    def test_errors_are_recorded(self):
        with utils.WorkerPool(2) as pool:
            results = pool.map_ordered(lambda x: 1 // x, [1, 0, 2])
        self.assertEqual(results[0], (1, None))
        self.assertIsNone(results[1][0])
        self.assertIsInstance(results[1][1], ZeroDivisionError)
        self.assertEqual(results[2], (0, None))


if __name__ == '__main__':
    unittest.main()
