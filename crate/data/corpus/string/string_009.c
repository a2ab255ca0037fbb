/* length of a string */
int my_strlen(const char *s)
{
    int count = 0;
    while (*s++)
        count++;
    return count;
}

int main()
{
    char s[1000];
    scanf("%s", s);
    printf("%d\n", my_strlen(s));
    return 0;
}
