import * as fs from 'fs';
import * as os from 'os';
import * as path from 'path';

import { describe, expect, it } from 'vitest';

import { main } from '../src/cli';
import { readTrajectoryCsv } from '../src/csv';
import { pngDimensions } from '../src/png';
import { render } from '../src/render';

const FIXTURE = path.join(__dirname, 'fixtures', 'fig2a_short.csv');
const PNG_MAGIC = Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);

function tmpDir(): string {
    return fs.mkdtempSync(path.join(os.tmpdir(), 'render-'));
}

describe('render', () => {
    it('writes a PNG whose plotted data equals the CSV data', () => {
        const out = path.join(tmpDir(), 's.png');
        const result = render({
            csvPaths: [FIXTURE], column: 's', epsilon: 0.1, outPath: out,
        });
        const bytes = fs.readFileSync(out);
        expect(bytes.subarray(0, 8).equals(PNG_MAGIC)).toBe(true);
        expect(pngDimensions(bytes)).toEqual({ width: 960, height: 300 });
        expect(result.data.band).toBe(0.1);

        const traj = readTrajectoryCsv(FIXTURE);
        expect(result.data.panels[0].x).toEqual(traj.columns.get('t'));
        expect(result.data.panels[0].y).toEqual(traj.columns.get('s'));
    });

    it('stacks one panel per CSV', () => {
        const out = path.join(tmpDir(), 'gain_pair.png');
        const result = render({
            csvPaths: [FIXTURE, FIXTURE], column: 'gain', outPath: out,
        });
        expect(result.height).toBe(600);
        expect(pngDimensions(fs.readFileSync(out)).height).toBe(600);
        expect(result.data.panels.length).toBe(2);
    });

    it('is deterministic across runs', () => {
        const dir = tmpDir();
        const a = path.join(dir, 'a.png');
        const b = path.join(dir, 'b.png');
        render({ csvPaths: [FIXTURE], column: 'phi', outPath: a });
        render({ csvPaths: [FIXTURE], column: 'phi', outPath: b });
        expect(fs.readFileSync(a).equals(fs.readFileSync(b))).toBe(true);
    });

    it('honors custom dimensions', () => {
        const out = path.join(tmpDir(), 'small.png');
        const result = render({
            csvPaths: [FIXTURE], column: 's', outPath: out, width: 320, panelHeight: 200,
        });
        expect(pngDimensions(result.png)).toEqual({ width: 320, height: 200 });
    });

    it('rejects an empty CSV by name', () => {
        const empty = path.join(tmpDir(), 'empty.csv');
        fs.writeFileSync(empty, '');
        expect(() => render({ csvPaths: [empty], column: 's', outPath: '/tmp/x.png' }))
            .toThrow(/empty/);
    });
});

describe('cli', () => {
    it('renders via flags', () => {
        const out = path.join(tmpDir(), 'cli.png');
        const code = main(['--csv', FIXTURE, '--column', 's', '--epsilon', '0.1',
            '--out', out]);
        expect(code).toBe(0);
        expect(fs.existsSync(out)).toBe(true);
    });

    it('usage errors exit 1', () => {
        expect(main(['--csv', FIXTURE, '--out', '/tmp/x.png'])).toBe(1); // no column
        expect(main(['--csv', FIXTURE, '--column', 'u2', '--out', '/tmp/x.png'])).toBe(1);
    });

    it('missing input exits 3', () => {
        expect(main(['--csv', '/does/not/exist.csv', '--column', 's',
            '--out', '/tmp/x.png'])).toBe(3);
    });

    it('unwritable output exits 3', () => {
        const blocker = path.join(tmpDir(), 'blocker');
        fs.writeFileSync(blocker, 'file');
        const out = path.join(blocker, 'sub', 'x.png');
        expect(main(['--csv', FIXTURE, '--column', 's', '--out', out])).toBe(3);
    });
});
