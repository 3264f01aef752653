/**
 * Trajectory CSV reading.
 *
 * The benchmark runner emits strict comma-separated files with a fixed
 * header and unquoted numeric fields in shortest round-trip form, so a
 * plain split recovers the exact doubles.
 */
import * as fs from 'fs';

export const TRAJECTORY_COLUMNS = [
    't', 's', 'u', 'u2', 'phi', 'L', 'phase',
    'gamma', 'delta', 'delta_dot', 'sat_flag',
] as const;

export class CsvError extends Error {
    constructor(message: string, readonly path?: string, readonly io = false) {
        super(path ? `${path}: ${message}` : message);
        this.name = 'CsvError';
    }
}

export interface Trajectory {
    path: string;
    columns: Map<string, Float64Array>;
    rows: number;
}

export function readTrajectoryCsv(path: string): Trajectory {
    let text: string;
    try {
        text = fs.readFileSync(path, 'utf-8');
    } catch (err) {
        throw new CsvError(`cannot read file (${(err as Error).message})`, path, true);
    }
    const lines = text.split('\n');
    if (lines.length > 0 && lines[lines.length - 1] === '') {
        lines.pop();
    }
    if (lines.length === 0) {
        throw new CsvError('empty file', path);
    }
    const header = lines[0].split(',');
    const rows = lines.length - 1;
    if (rows === 0) {
        throw new CsvError('no data rows', path);
    }

    const columns = new Map<string, Float64Array>();
    for (const name of header) {
        columns.set(name, new Float64Array(rows));
    }
    for (let i = 0; i < rows; i++) {
        const fields = lines[i + 1].split(',');
        if (fields.length !== header.length) {
            throw new CsvError(
                `line ${i + 2}: expected ${header.length} fields, got ${fields.length}`, path);
        }
        for (let j = 0; j < header.length; j++) {
            const value = Number(fields[j]);
            if (Number.isNaN(value) && fields[j] !== 'nan') {
                throw new CsvError(`line ${i + 2}: non-numeric field ${fields[j]!}`, path);
            }
            columns.get(header[j])![i] = value;
        }
    }
    return { path, columns, rows };
}

export function requireColumn(traj: Trajectory, name: string): Float64Array {
    const col = traj.columns.get(name);
    if (col === undefined) {
        throw new CsvError(`missing column '${name}'`, traj.path);
    }
    return col;
}
