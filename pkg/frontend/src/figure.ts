/**
 * Figure model: which CSVs, which column, band overlay, and the prepared
 * per-panel series. Preparation is pure so tests can assert the plotted
 * data equals the CSV data exactly.
 */
import * as path from 'path';

import { requireColumn, Trajectory } from './csv';

export type ColumnChoice = 's' | 'phi' | 'gain';

/** CLI column names mapped onto trajectory CSV headers. */
export const COLUMN_TO_CSV: Record<ColumnChoice, string> = {
    s: 's',
    phi: 'phi',
    gain: 'L',
};

export class FigureError extends Error {
    constructor(message: string) {
        super(message);
        this.name = 'FigureError';
    }
}

export interface FigureSpec {
    csvPaths: string[];
    column: ColumnChoice;
    /** Band half-width; drawn as horizontal lines at +/- value when the
     *  column is 's'. */
    epsilon?: number;
    outPath: string;
    xLabel?: string;
    yLabel?: string;
    width?: number;
    panelHeight?: number;
}

export interface Panel {
    title: string;
    x: Float64Array;
    y: Float64Array;
}

export interface FigureData {
    panels: Panel[];
    /** Band half-width to overlay, or null when not applicable. */
    band: number | null;
    xLabel: string;
    yLabel: string;
}

export function validateSpec(spec: FigureSpec): void {
    if (spec.csvPaths.length === 0) {
        throw new FigureError('at least one input CSV is required');
    }
    if (!(spec.column in COLUMN_TO_CSV)) {
        throw new FigureError(`unknown column '${spec.column}' (choose s, phi, or gain)`);
    }
    if (spec.epsilon !== undefined && !(spec.epsilon > 0)) {
        throw new FigureError('epsilon must be > 0');
    }
}

export function prepareFigure(spec: FigureSpec, trajectories: Trajectory[]): FigureData {
    validateSpec(spec);
    const csvColumn = COLUMN_TO_CSV[spec.column];
    const panels = trajectories.map((traj) => ({
        title: path.basename(traj.path).replace(/\.csv$/, ''),
        x: requireColumn(traj, 't'),
        y: requireColumn(traj, csvColumn),
    }));
    const band = spec.column === 's' && spec.epsilon !== undefined ? spec.epsilon : null;
    return {
        panels,
        band,
        xLabel: spec.xLabel ?? 't [s]',
        yLabel: spec.yLabel ?? spec.column,
    };
}

/** Round tick positions covering [lo, hi] with a 1/2/5 step. */
export function ticks(lo: number, hi: number, target = 5): number[] {
    if (!(hi > lo)) {
        return [lo];
    }
    const step0 = (hi - lo) / target;
    const mag = 10 ** Math.floor(Math.log10(step0));
    const norm = step0 / mag;
    const step = (norm < 1.5 ? 1 : norm < 3.5 ? 2 : norm < 7.5 ? 5 : 10) * mag;
    const out: number[] = [];
    for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
        out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return out;
}

export function tickLabel(v: number): string {
    return String(Number(v.toPrecision(6)));
}
