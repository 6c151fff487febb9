import { defineConfig } from 'vitest/config';

// The dev server proxies the pipeline service so the UI only ever talks to
// its own origin; point VITE_API_TARGET elsewhere to use another backend.
export default defineConfig({
  server: {
    proxy: {
      '/api': {
        target: process.env.VITE_API_TARGET ?? 'http://127.0.0.1:8000',
        changeOrigin: true,
      },
    },
  },
  test: {
    environment: 'jsdom',
    include: ['tests/**/*.test.ts'],
  },
});
