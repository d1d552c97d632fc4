import io

import pytest
import yaml

from cellsheaf.cli import main
from cellsheaf.formats import serialize
from cellsheaf.sheaves import constant_sheaf
from cellsheaf.topology.standard import interval


@pytest.fixture
def run(corpus):
    """ Run the command line on corpus fixtures, given by name """

    def runner(*argv, environ=None):
        resolved = []
        for arg in argv:
            try:
                fixture = corpus.get(arg)
            except KeyError:
                resolved.append(arg)
            else:
                resolved.append(corpus.path_of(fixture.path))
        out = io.StringIO()
        code = main(resolved, out=out, environ=environ or {})
        return code, out.getvalue()

    return runner


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_validate(run):
    assert run('validate', 'closed-bar') == (0, 'ok cosheaf\n')

    code, out = run('validate', 'sign-broken-square')
    assert code == 1
    assert out.startswith('violation ')


def test_cohomology(run):
    assert run('cohomology', 'half-open-interval') == (0, 'H^0 = 1\nH^1 = 0\n')
    assert run('cohomology', 'half-open-interval', '--compact') == (0, 'H^0_c = 0\nH^1_c = 0\n')
    assert run('cohomology', 'open-interval', '--compact') == (0, 'H^0_c = 0\nH^1_c = 1\n')


def test_homology(run):
    assert run('homology', 'closed-bar', '--bm') == (0, 'H_0^BM = 1\nH_1^BM = 0\n')
    assert run('homology', 'open-bar') == (0, 'H_0 = 0\nH_1 = 1\n')


def test_cech(run):
    assert run('cech', 'cech-two-set') == (0, 'Cech homology\nH_0 = 1\nH_1 = 2\n')


def test_push(run):
    assert run('push', 'open-sheaf', '--map', 'open-inclusion', '--functor', 'dagger',
               '--target-only') == (0, 'stalk x 0\nstalk y 0\nstalk a 2\n')

    code, out = run('push', 'open-sheaf', '--map', 'open-inclusion', '--functor', 'lower-star')
    assert code == 0
    assert out.startswith('kind sheaf\n')

    code, _ = run('push', 'closed-bar', '--map', 'open-inclusion', '--functor', 'dagger')
    assert code == 1


def test_barcode_and_paths(run):
    assert run('barcode', 'closed-bar') == (0, '[x, y] kind=cc mult=1\n')

    code, out = run('sense', 'path', 'mobile-sensors')
    assert code == 0
    assert 'verdict long-bar-present-inconclusive' in out.splitlines()

    code, out = run('sense', 'path', 'no-flow')
    assert 'verdict certified-no-path' in out.splitlines()


def test_derived(run):
    assert run('derived', 'half-open-sheaf', '--functor', 'Rp_*') == (0, 'Rp_*\nR^0 = 3\n')
    assert run('derived', 'half-open-sheaf', '--functor', 'Rp_*', '--degree', '1') == \
        (0, 'Rp_*\nR^1 = 0\n')


def test_resolve_equivalence_and_verdier(run):
    code, out = run('resolve', 'closed-bar', '--kind', 'proj')
    assert code == 0
    assert out.startswith('proj-cosheaf complex, homological\n')

    code, out = run('equivalence', 'half-open-interval')
    assert code == 0
    assert out.splitlines()[-1] == 'ok true'

    code, out = run('verdier', 'circle-source')
    assert code == 0
    assert out.startswith('inj-sheaf complex')


def test_coend(run, tmp_path):
    sheaf = write(tmp_path, 'constant.sheaf', serialize(constant_sheaf(interval())))
    assert run('coend', 'closed-bar', sheaf) == (0, 'dim = 1\n')


def test_netcode(run):
    code, out = run('netcode', 'check', 'decoding-wire')
    assert code == 0
    assert out.splitlines()[-1] == 'ok true'

    code, out = run('netcode', 'decompose', 'routing')
    assert code == 0
    assert len(out.splitlines()) == 4


def test_sense(run):
    code, out = run('sense', 'les', 'forcing', '--known', '2')
    assert code == 0
    lines = out.splitlines()
    assert 'exact true' in lines
    assert 'forced H^0(cok) = 3' in lines
    assert lines[-1] == 'unknown evasion set components = 1'

    code, out = run('sense', 'evade', 'red-green')
    assert code == 0
    assert out.splitlines()[-1] == 'H_0(evasion) = 3'


def test_yaml_output(run):
    code, out = run('cohomology', 'half-open-interval', '--format', 'yaml')
    assert code == 0
    assert yaml.safe_load(out)['command'] == 'cohomology'


def test_field_from_the_environment(run):
    code, out = run('cohomology', 'half-open-interval', environ={'FIELD': 'F4'})
    assert code == 2
    assert out == ''

    assert run('cohomology', 'half-open-interval', environ={'FIELD': 'F2'})[0] == 0


def test_usage_errors(run, tmp_path):
    assert run('cohomology', 'closed-bar')[0] == 2
    assert run('cohomology', str(tmp_path / 'missing.sheaf'))[0] == 2
    assert run('cohomology', 'half-open-interval', '--field', 'F9')[0] == 2
    assert run('cohomology', write(tmp_path, 'bad.sheaf', 'kind sheaf\nformat 9.0.0\n'))[0] == 2

    with pytest.raises(SystemExit):
        main(['cohomology'], out=io.StringIO(), environ={})


def test_invalid_inputs(run, tmp_path):
    broken = write(tmp_path, 'broken.sheaf', (
        'kind sheaf\n'
        'cell x dim=0\ncell y dim=0\ncell a dim=1\ncell b dim=1\ncell s dim=2\n'
        'cover x a sign=-1\ncover y a sign=1\ncover x b sign=-1\ncover y b sign=1\n'
        'cover a s sign=1\ncover b s sign=1\n'))
    assert run('cohomology', broken)[0] == 1
    assert run('validate', broken)[0] == 1
