from .. import claims
from .. import cli
from ..config import ConfigError, LcsConfig
import contextlib
import io
import json
import logging
import os
import tempfile
import unittest

QUIET = ['--debuglevel', 'critical', '--colorbg', 'none']


def run(*argv):
    """Exit status and stdout of the command line."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = cli.main(QUIET + list(argv))
    return status, out.getvalue(), err.getvalue()


class TestQueries(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(run('parse', '[x1,x2]'), (0, 'x1*x2 - x2*x1\n', ''))

    def test_member(self):
        self.assertEqual(run('member', '[x1,x2,x3]*[x4,x5]', 'T4')[:2], (0, 'false\n'))
        self.assertEqual(run('member', '3*[x1,x2,x3]*[x4,x5]', 'T4')[:2], (0, 'true\n'))
        self.assertEqual(run('member', '0', 'T4')[:2], (0, 'true\n'))

    def test_order(self):
        self.assertEqual(run('order', '[x1,x2,x3]*[x4,x5]', 'T4')[:2], (0, '3\n'))
        self.assertEqual(run('order', 'x1', 'T4')[:2], (0, 'infinite\n'))
        status, out, _ = run('order', '[x1*[x2,x3,x4],x5]', 'gamma4')
        self.assertEqual(status, 0)
        self.assertIn(int(out), (2, 3, 6))

    def test_json(self):
        status, out, _ = run('--json', 'order', '[x1,x2]^2', 'T32')
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 1)
        self.assertEqual(json.loads(lines[0])['order'], 'infinite')


class TestErrors(unittest.TestCase):

    def test_syntax(self):
        status, out, err = run('member', '[x1,x2', 'T4')
        self.assertEqual(status, 2)
        self.assertEqual(out, '')
        self.assertIn('expected', err)

    def test_power_too_large(self):
        status, out, err = run('parse', '(x1 + x2)^40')
        self.assertEqual((status, out), (2, ''))
        self.assertIn('too large', err)

    def test_unknown_spec(self):
        self.assertEqual(run('member', 'x1', 'S4')[0], 2)

    def test_unknown_claim(self):
        self.assertEqual(run('verify', 'lemma-9.9')[0], 2)

    def test_usage(self):
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            with self.assertRaises(SystemExit) as cm:
                cli.main(QUIET)
        self.assertEqual(cm.exception.code, 2)

    def test_missing_config(self):
        status, _, err = run('--config', '/nonexistent/lcstorsion.ini', 'list')
        self.assertEqual(status, 2)
        self.assertIn('does not exist', err)


class TestVerify(unittest.TestCase):

    def tearDown(self):
        claims.REGISTRY.pop('test-cli-fails', None)

    def test_verified(self):
        status, out, _ = run('verify', 'theorem-1.1', 'lemma-3.2')
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith('theorem-1.1'))
        self.assertTrue(lines[0].endswith('verified'))

    def test_json_lines(self):
        status, out, _ = run('--json', 'verify', 'lemma-2.4', 'theorem-1.1')
        self.assertEqual(status, 0)
        records = [json.loads(line) for line in out.splitlines()]
        self.assertEqual([r['claim_id'] for r in records], ['lemma-2.4', 'theorem-1.1'])
        self.assertEqual(records[1]['witnesses']['order'], 3)
        self.assertTrue(all(r['status'] == 'verified' for r in records))

    def test_failure_exit_code(self):
        claims.claim('test-cli-fails', 'always fails')(lambda settings: (False, {'why': 'test'}))
        status, out, _ = run('verify', 'test-cli-fails')
        self.assertEqual(status, 1)
        self.assertIn('failed', out)
        self.assertIn('"why": "test"', out)

    def test_list(self):
        status, out, _ = run('list')
        self.assertEqual(status, 0)
        self.assertEqual(len(out.splitlines()), len(claims.REGISTRY))
        self.assertTrue(out.startswith('theorem-1.1'))


class TestConfig(unittest.TestCase):

    def setUp(self):
        fd, self.path = tempfile.mkstemp(suffix='.ini')
        with os.fdopen(fd, 'w') as f:
            f.write('[lcstorsion]\nmax_degree = 3\njson = yes\nseed = $LCS_TEST_SEED\n')
        os.environ['LCS_TEST_SEED'] = '17'

    def tearDown(self):
        os.remove(self.path)
        del os.environ['LCS_TEST_SEED']

    def test_defaults(self):
        conf = LcsConfig(['list'])
        self.assertEqual(conf.command, 'list')
        self.assertEqual(conf.debuglevel, 'info')
        self.assertEqual(conf.max_component_dim, 720)
        self.assertFalse(conf.transforms)

    def test_file(self):
        conf = LcsConfig(['--config', self.path, 'list'])
        self.assertEqual(conf.max_degree, 3)
        self.assertTrue(conf.json)
        self.assertEqual(conf.seed, 17)

    def test_command_line_wins(self):
        conf = LcsConfig(['--config', self.path, '--max-degree', '4', 'list'])
        self.assertEqual(conf.max_degree, 4)

    def test_options_after_command(self):
        conf = LcsConfig(['--config', self.path, 'verify', 'all', '--max-degree', '2', '-j', '3'])
        self.assertEqual(conf.max_degree, 2)
        self.assertEqual(conf.threads, 3)
        self.assertEqual(conf.args.claims, ['all'])
        self.assertTrue(conf.json)

    def test_settings(self):
        conf = LcsConfig(['--transforms', '--max-var', '4', 'list'])
        s = conf.settings()
        self.assertTrue(s.transforms)
        self.assertEqual(s.max_var, 4)

    def test_missing_file(self):
        self.assertRaises(ConfigError, LcsConfig, ['--config', '/nonexistent/x.ini', 'list'])


class TestLogger(unittest.TestCase):

    def tearDown(self):
        cli.setup_logger('warning')

    def test_levels(self):
        self.assertEqual(cli.debug_level_value('debug'), logging.DEBUG)
        self.assertEqual(cli.debug_level_value('critical'), logging.CRITICAL)
        self.assertRaises(AssertionError, cli.debug_level_value, 'loud')

    def test_single_handler(self):
        cli.setup_logger('info')
        logger = cli.setup_logger('debug')
        self.assertEqual(len(logger.handlers), 1)
        self.assertEqual(logger.level, logging.DEBUG)

    def test_log_file(self):
        fd, path = tempfile.mkstemp(suffix='.log')
        os.close(fd)
        try:
            logger = cli.setup_logger('info', path)
            logging.getLogger('lcstorsion.test').info('hello')
            for h in logger.handlers:
                h.flush()
            with open(path) as f:
                self.assertEqual(f.read(), 'INFO: hello\n')
        finally:
            cli.setup_logger('warning')
            os.remove(path)


if __name__ == '__main__':
    unittest.main()
