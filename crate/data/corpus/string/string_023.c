/* most frequent letter */
int main()
{
    char line[1000];
    int freq[26] = {0}, idx, mx = 0;
    scanf("%s", line);
    for (idx = 0; line[idx]; idx++)
        if (line[idx] >= 'a' && line[idx] <= 'z')
            freq[line[idx] - 'a']++;
    for (idx = 1; idx < 26; idx++)
        if (freq[idx] > freq[mx])
            mx = idx;
    printf("%c %d\n", 'a' + mx, freq[mx]);
    return 0;
}
