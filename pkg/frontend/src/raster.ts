/**
 * Tiny software canvas: RGB pixel buffer with lines, rectangles, and
 * bitmap-font text. Everything integer/deterministic.
 */
import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphFor } from './font';

export type Color = readonly [number, number, number];

export const WHITE: Color = [255, 255, 255];
export const BLACK: Color = [0, 0, 0];
export const GREY: Color = [200, 200, 200];
export const BLUE: Color = [31, 90, 166];
export const ORANGE: Color = [204, 102, 17];
export const RED: Color = [190, 30, 30];

export class Canvas {
    readonly pixels: Uint8Array;

    constructor(readonly width: number, readonly height: number, fill: Color = WHITE) {
        this.pixels = new Uint8Array(width * height * 3);
        for (let i = 0; i < width * height; i++) {
            this.pixels[3 * i] = fill[0];
            this.pixels[3 * i + 1] = fill[1];
            this.pixels[3 * i + 2] = fill[2];
        }
    }

    set(x: number, y: number, color: Color): void {
        if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
            return;
        }
        const i = 3 * (y * this.width + x);
        this.pixels[i] = color[0];
        this.pixels[i + 1] = color[1];
        this.pixels[i + 2] = color[2];
    }

    get(x: number, y: number): Color {
        const i = 3 * (y * this.width + x);
        return [this.pixels[i], this.pixels[i + 1], this.pixels[i + 2]];
    }

    /** Bresenham line; thickness grows the stroke into a small square pen. */
    line(x0: number, y0: number, x1: number, y1: number, color: Color, thickness = 1): void {
        let x = Math.round(x0);
        let y = Math.round(y0);
        const xe = Math.round(x1);
        const ye = Math.round(y1);
        const dx = Math.abs(xe - x);
        const dy = -Math.abs(ye - y);
        const sx = x < xe ? 1 : -1;
        const sy = y < ye ? 1 : -1;
        let err = dx + dy;
        const r = Math.floor(thickness / 2);
        for (;;) {
            for (let oy = -r; oy <= r; oy++) {
                for (let ox = -r; ox <= r; ox++) {
                    this.set(x + ox, y + oy, color);
                }
            }
            if (x === xe && y === ye) {
                break;
            }
            const e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y += sy;
            }
        }
    }

    rect(x0: number, y0: number, x1: number, y1: number, color: Color): void {
        this.line(x0, y0, x1, y0, color);
        this.line(x1, y0, x1, y1, color);
        this.line(x1, y1, x0, y1, color);
        this.line(x0, y1, x0, y0, color);
    }

    text(x: number, y: number, s: string, color: Color, scale = 1): void {
        let cx = Math.round(x);
        const cy = Math.round(y);
        for (const ch of s) {
            const glyph = glyphFor(ch);
            for (let row = 0; row < GLYPH_HEIGHT; row++) {
                for (let col = 0; col < GLYPH_WIDTH; col++) {
                    if ((glyph[row] >> (GLYPH_WIDTH - 1 - col)) & 1) {
                        for (let oy = 0; oy < scale; oy++) {
                            for (let ox = 0; ox < scale; ox++) {
                                this.set(cx + col * scale + ox, cy + row * scale + oy, color);
                            }
                        }
                    }
                }
            }
            cx += (GLYPH_WIDTH + 1) * scale;
        }
    }
}

export function textWidth(s: string, scale = 1): number {
    return s.length * (GLYPH_WIDTH + 1) * scale - scale;
}

export const TEXT_HEIGHT = GLYPH_HEIGHT;
